use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use spdsolve::existence::{
    check_theorem1, check_theorem2, check_theorem3, find_alpha_theorem4, ExistenceCertificate,
    FactorWitness, DIAGONAL_TOL,
};
use spdsolve::manifest::read_problem;
use spdsolve::matfile::read_matrix;
use spdsolve::matkernel::{singular_values, Matrix, SpdMatrix};
use spdsolve::neqsolvers::EquationSpec;
use spdsolve::Result;

use super::generate::GenCase;
use super::{invalid, write_json, EXIT_FALSE, EXIT_OK};

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_enum, required_unless_present = "manifest")]
    pub case: Option<GenCase>,
    /// Problem written by `generate`; supplies A or the factor witness.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Case 2 coefficient.
    #[arg(long = "A")]
    pub a: Option<PathBuf>,
    /// Case 2: test this α instead of searching for one.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long = "L")]
    pub l: Option<PathBuf>,
    /// Case 1 witness factor.
    #[arg(long = "N")]
    pub n: Option<PathBuf>,
    #[arg(long = "N1")]
    pub n1: Option<PathBuf>,
    #[arg(long = "N2")]
    pub n2: Option<PathBuf>,
    /// Defaults to the identity.
    #[arg(long = "Q")]
    pub q: Option<PathBuf>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub t1: Option<f64>,
    #[arg(long)]
    pub t2: Option<f64>,
}

#[derive(Serialize)]
struct WitnessOutcome {
    case: &'static str,
    holds: bool,
    off_diagonal_ratio: f64,
    threshold: f64,
}

#[derive(Serialize)]
struct SingularValueOutcome {
    case: &'static str,
    holds: bool,
    sigma_min: f64,
    sigma_max: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<ExistenceCertificate>,
}

fn witness_from_flags(args: &CheckArgs, factors: &[&Option<PathBuf>]) -> Result<FactorWitness> {
    let l = read_matrix(args.l.as_ref().ok_or_else(|| invalid("missing --L"))?)?;
    let n_list = factors
        .iter()
        .map(|p| match p {
            Some(p) => read_matrix(p),
            None => Err(invalid("missing witness factor (--N, or --N1 and --N2)")),
        })
        .collect::<Result<Vec<_>>>()?;
    let q = match &args.q {
        Some(p) => SpdMatrix::from_matrix(read_matrix(p)?)
            .map_err(|e| invalid(format!("Q must be SPD: {e}")))?,
        None => SpdMatrix::identity(l.rows()),
    };
    FactorWitness::new(l, n_list, q)
}

fn check_singular_values(a: &Matrix, alpha: Option<f64>) -> Result<SingularValueOutcome> {
    let sv = singular_values(a)?;
    let (sigma_min, sigma_max) = (sv[0], sv[sv.len() - 1]);
    let (holds, certificate) = match alpha {
        Some(alpha) => {
            let (holds, cert) = check_theorem3(a, alpha)?;
            (holds, Some(cert))
        }
        None => {
            let cert = find_alpha_theorem4(a)?;
            (cert.is_some(), cert)
        }
    };
    Ok(SingularValueOutcome {
        case: "2",
        holds,
        sigma_min,
        sigma_max,
        certificate,
    })
}

pub fn run(args: CheckArgs) -> Result<u8> {
    let problem = args.manifest.as_ref().map(|m| read_problem(m)).transpose()?;
    let case = match (&problem, args.case) {
        (_, Some(c)) => c,
        (Some(p), None) => match p.case_tag {
            1 => GenCase::One,
            2 => GenCase::Two,
            3 => GenCase::Three,
            _ => return Err(invalid("check applies to cases 1, 2 and 3")),
        },
        (None, None) => return Err(invalid("give --case or --manifest")),
    };

    let holds = match case {
        GenCase::Two => {
            let a = match &problem {
                Some(p) => match &p.spec {
                    EquationSpec::Case2 { a, .. } => a.clone(),
                    _ => return Err(invalid("manifest is not a case 2 problem")),
                },
                None => read_matrix(args.a.as_ref().ok_or_else(|| invalid("missing --A"))?)?,
            };
            let outcome = check_singular_values(&a, args.alpha)?;
            write_json(&outcome, None)?;
            outcome.holds
        }
        GenCase::One | GenCase::Three => {
            let witness = match &problem {
                Some(p) => p
                    .witness
                    .clone()
                    .ok_or_else(|| invalid("manifest carries no factor witness"))?,
                None if case == GenCase::One => witness_from_flags(&args, &[&args.n])?,
                None => witness_from_flags(&args, &[&args.n1, &args.n2])?,
            };
            let holds = if case == GenCase::One {
                check_theorem2(&witness)?
            } else {
                let (s, t1, t2) = match problem.as_ref().map(|p| &p.spec) {
                    Some(EquationSpec::Case3 { s, t1, t2, .. }) => (*s, *t1, *t2),
                    _ => (
                        args.s.ok_or_else(|| invalid("missing --s"))?,
                        args.t1.ok_or_else(|| invalid("missing --t1"))?,
                        args.t2.ok_or_else(|| invalid("missing --t2"))?,
                    ),
                };
                check_theorem1(&witness, s, t1, t2)?
            };
            let outcome = WitnessOutcome {
                case: if case == GenCase::One { "1" } else { "3" },
                holds,
                off_diagonal_ratio: witness.off_diagonal_ratio()?,
                threshold: DIAGONAL_TOL,
            };
            write_json(&outcome, None)?;
            holds
        }
    };
    Ok(if holds { EXIT_OK } else { EXIT_FALSE })
}
