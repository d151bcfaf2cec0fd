use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::{Deserialize, Serialize};
use spdsolve::bench::{emit_records, run_suite, Format};
use spdsolve::manifest::read_problem;
use spdsolve::neqsolvers::SolverConfig;
use spdsolve::probgen::{fixture_by_name, GeneratedProblem};
use spdsolve::{Error, Result};

use super::generate::{generate_one, GenCase};
use super::{invalid, write_json, EXIT_OK};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Suite description (JSON).
    #[arg(long)]
    pub suite: PathBuf,
    /// Comma-separated solver ids; overrides the suite's list.
    #[arg(long, value_delimiter = ',')]
    pub solvers: Vec<String>,
    /// Records file; `.json` selects JSON, anything else CSV.
    #[arg(long)]
    pub out: PathBuf,
}

/// ```json
/// {
///   "solvers": ["nonlinear1", "fp1"],
///   "problems": [
///     {"generate": {"case": 1, "n": 10, "seed": 0, "count": 20}},
///     {"manifest": "dir/manifest.json"},
///     {"fixture": "case1-ex1"}
///   ],
///   "delta": 1e-10, "eps": 1e-12, "max_iter": 500
/// }
/// ```
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    #[serde(default)]
    pub solvers: Vec<String>,
    pub problems: Vec<ProblemSource>,
    pub delta: Option<f64>,
    pub eps: Option<f64>,
    pub max_iter: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ProblemSource {
    Generate(Directive),
    /// Relative paths resolve against the suite file's directory.
    Manifest(PathBuf),
    Fixture(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Directive {
    pub case: u8,
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "one")]
    pub count: u64,
    pub alpha: Option<f64>,
    pub s: Option<f64>,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
}

fn one() -> u64 {
    1
}

#[derive(Serialize)]
struct Summary<'a> {
    problems: usize,
    records: usize,
    converged: usize,
    out: &'a Path,
}

fn expand(source: &ProblemSource, base: &Path) -> Result<Vec<GeneratedProblem>> {
    match source {
        ProblemSource::Fixture(name) => fixture_by_name(name)
            .map(|p| vec![p])
            .ok_or_else(|| invalid(format!("unknown fixture `{name}`"))),
        ProblemSource::Manifest(p) => Ok(vec![read_problem(&base.join(p))?]),
        ProblemSource::Generate(d) => {
            let case = match d.case {
                1 => GenCase::One,
                2 => GenCase::Two,
                3 => GenCase::Three,
                c => return Err(invalid(format!("generator case must be 1, 2 or 3, got {c}"))),
            };
            (d.seed..d.seed + d.count)
                .map(|seed| generate_one(case, d.n, seed, d.alpha, d.s, d.t1, d.t2))
                .collect()
        }
    }
}

pub fn load_suite(path: &Path) -> Result<(Suite, Vec<GeneratedProblem>)> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let suite: Suite = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut problems = Vec::new();
    for source in &suite.problems {
        problems.extend(expand(source, base)?);
    }
    Ok((suite, problems))
}

pub fn run(args: BenchArgs) -> Result<u8> {
    let (suite, problems) = load_suite(&args.suite)?;
    let solvers = if args.solvers.is_empty() {
        &suite.solvers
    } else {
        &args.solvers
    };
    let defaults = SolverConfig::default();
    let cfg = SolverConfig {
        delta: suite.delta.unwrap_or(defaults.delta),
        eps: suite.eps.unwrap_or(defaults.eps),
        max_iter: suite.max_iter.unwrap_or(defaults.max_iter),
        ..defaults
    };
    let records = run_suite(&problems, solvers, &cfg)?;
    emit_records(&records, &args.out, Format::from_path(&args.out))?;
    write_json(
        &Summary {
            problems: problems.len(),
            records: records.len(),
            converged: records.iter().filter(|r| r.converged).count(),
            out: &args.out,
        },
        None,
    )?;
    Ok(EXIT_OK)
}
