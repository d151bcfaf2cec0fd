use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Serialize;
use spdsolve::baselines::fixed_point;
use spdsolve::manifest::read_problem;
use spdsolve::matfile::{read_matrix, write_matrix};
use spdsolve::matkernel::{Matrix, SpdMatrix};
use spdsolve::neqsolvers::{solve, EquationSpec, SolverConfig};
use spdsolve::Result;

use super::{invalid, write_json, EXIT_MAX_ITER, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "general")]
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolverArg {
    Nonlinear,
    /// Plain substitution iteration (a comparison stand-in).
    FixedPoint,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, value_enum, required_unless_present = "manifest")]
    pub case: Option<CaseArg>,
    /// Coefficient A (A1 for case 3, first term for `general`).
    #[arg(long = "A")]
    pub a: Option<PathBuf>,
    /// Second coefficient for case 3.
    #[arg(long = "A2")]
    pub a2: Option<PathBuf>,
    /// Further coefficients, in order; repeat the flag.
    #[arg(long = "Ai")]
    pub ai: Vec<PathBuf>,
    #[arg(long = "Q")]
    pub q: Option<PathBuf>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub t1: Option<f64>,
    #[arg(long)]
    pub t2: Option<f64>,
    /// Exponent per coefficient for `general`; repeat the flag.
    #[arg(long = "t")]
    pub t: Vec<f64>,
    /// Problem manifest written by `generate`; replaces the matrix flags.
    #[arg(long, conflicts_with_all = ["case", "a", "a2", "ai", "q"])]
    pub manifest: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    pub delta: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    #[arg(long, default_value_t = 500)]
    pub max_iter: usize,
    #[arg(long, value_enum, default_value = "nonlinear")]
    pub solver: SolverArg,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the computed X as a matrix file.
    #[arg(long)]
    pub x_out: Option<PathBuf>,
    /// Include X in the JSON report.
    #[arg(long)]
    pub print_x: bool,
}

#[derive(Serialize)]
struct Report {
    case: String,
    n: usize,
    solver: &'static str,
    /// True for the fixed-point comparison stand-in.
    stand_in: bool,
    converged: bool,
    iterations: usize,
    #[serde(rename = "E")]
    e: f64,
    true_residual: f64,
    time_s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    x_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<Vec<Vec<f64>>>,
}

fn load(path: &Option<PathBuf>, flag: &str) -> Result<Matrix> {
    match path {
        Some(p) => read_matrix(p),
        None => Err(invalid(format!("missing --{flag}"))),
    }
}

fn need(v: Option<f64>, flag: &str) -> Result<f64> {
    v.ok_or_else(|| invalid(format!("missing --{flag}")))
}

fn load_q(path: &Option<PathBuf>) -> Result<SpdMatrix> {
    let q = load(path, "Q")?;
    SpdMatrix::from_matrix(q).map_err(|e| invalid(format!("Q must be SPD: {e}")))
}

fn spec_from_flags(args: &SolveArgs, case: CaseArg) -> Result<EquationSpec> {
    let spec = match case {
        CaseArg::One | CaseArg::Two => {
            let a = load(&args.a, "A")?;
            let q = load_q(&args.q)?;
            if case == CaseArg::One {
                EquationSpec::Case1 { a, q }
            } else {
                EquationSpec::Case2 { a, q }
            }
        }
        CaseArg::Three => {
            let (s, t1, t2) = (need(args.s, "s")?, need(args.t1, "t1")?, need(args.t2, "t2")?);
            let mut coeffs = args.a.iter().chain(&args.a2).chain(&args.ai);
            let (Some(p1), Some(p2), None) = (coeffs.next(), coeffs.next(), coeffs.next()) else {
                return Err(invalid("case 3 takes exactly two coefficients (--A and --A2)"));
            };
            EquationSpec::Case3 {
                a1: read_matrix(p1)?,
                a2: read_matrix(p2)?,
                q: load_q(&args.q)?,
                s,
                t1,
                t2,
            }
        }
        CaseArg::General => {
            let s = need(args.s, "s")?;
            let a_list = args
                .a
                .iter()
                .chain(&args.ai)
                .map(|p| read_matrix(p))
                .collect::<Result<Vec<_>>>()?;
            if a_list.is_empty() {
                return Err(invalid("general case needs at least one --Ai"));
            }
            EquationSpec::General {
                a_list,
                t_list: args.t.clone(),
                s,
                q: load_q(&args.q)?,
            }
        }
    };
    spec.validate()?;
    Ok(spec)
}

pub fn run(args: SolveArgs) -> Result<u8> {
    let spec = match (&args.manifest, args.case) {
        (Some(m), _) => read_problem(m)?.spec,
        (None, Some(case)) => spec_from_flags(&args, case)?,
        (None, None) => return Err(invalid("give --case or --manifest")),
    };
    let cfg = SolverConfig {
        delta: args.delta,
        eps: args.eps,
        max_iter: args.max_iter,
        ..Default::default()
    };
    cfg.validate()?;

    let report = match args.solver {
        SolverArg::Nonlinear => solve(&spec, &cfg)?,
        SolverArg::FixedPoint => fixed_point(&spec, &cfg)?,
    };
    if let Some(p) = &args.x_out {
        write_matrix(p, &report.x, Some("computed X"))?;
    }
    let out = Report {
        case: spec.case_label().to_string(),
        n: spec.dim(),
        solver: match args.solver {
            SolverArg::Nonlinear => "nonlinear",
            SolverArg::FixedPoint => "fixed-point",
        },
        stand_in: args.solver == SolverArg::FixedPoint,
        converged: report.converged,
        iterations: report.iterations,
        e: report.e,
        true_residual: report.true_residual,
        time_s: report.wall_time,
        x_path: args.x_out.clone(),
        x: args.print_x.then(|| report.x.to_rows()),
    };
    write_json(&out, args.out.as_deref().map(Path::new))?;
    Ok(if report.converged { EXIT_OK } else { EXIT_MAX_ITER })
}

