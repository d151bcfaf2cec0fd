use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use spdsolve::manifest::write_problem;
use spdsolve::probgen::{fixture_by_name, gen_case1, gen_case2, gen_case3, GeneratedProblem};
use spdsolve::Result;

use super::{invalid, write_json, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenCase {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum, required_unless_present = "fixture")]
    pub case: Option<GenCase>,
    #[arg(long, required_unless_present = "fixture")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of problems; seeds run from --seed upward, one subdirectory each.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// Case 2: singular values are drawn inside the bounds for this α (> 2).
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub t1: Option<f64>,
    #[arg(long)]
    pub t2: Option<f64>,
    /// Write a named published example instead of a random problem.
    #[arg(long, conflicts_with_all = ["case", "n", "alpha", "s", "t1", "t2"])]
    pub fixture: Option<String>,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Serialize)]
struct Written {
    name: String,
    manifest: PathBuf,
}

/// Builds the problem for one seed from generator flags.
pub fn generate_one(
    case: GenCase,
    n: usize,
    seed: u64,
    alpha: Option<f64>,
    s: Option<f64>,
    t1: Option<f64>,
    t2: Option<f64>,
) -> Result<GeneratedProblem> {
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| invalid(format!("missing --{flag}")));
    match case {
        GenCase::One => gen_case1(n, seed),
        GenCase::Two => gen_case2(n, need(alpha, "alpha")?, seed),
        GenCase::Three => gen_case3(n, need(s, "s")?, need(t1, "t1")?, need(t2, "t2")?, seed),
    }
}

pub fn run(args: GenerateArgs) -> Result<u8> {
    let mut written = Vec::new();
    if let Some(name) = &args.fixture {
        let p = fixture_by_name(name).ok_or_else(|| invalid(format!("unknown fixture `{name}`")))?;
        let manifest = write_problem(&args.out_dir, &p)?;
        written.push(Written { name: p.name, manifest });
    } else {
        let (case, n) = (args.case.expect("clap"), args.n.expect("clap"));
        if args.count == 0 {
            return Err(invalid("--count must be positive"));
        }
        for seed in args.seed..args.seed + args.count {
            let p = generate_one(case, n, seed, args.alpha, args.s, args.t1, args.t2)?;
            let dir = if args.count == 1 {
                args.out_dir.clone()
            } else {
                args.out_dir.join(&p.name)
            };
            let manifest = write_problem(&dir, &p)?;
            written.push(Written { name: p.name, manifest });
        }
    }
    write_json(&written, None)?;
    Ok(EXIT_OK)
}
