//! Solver × problem grids, performance profiles, and their CSV/JSON forms.

mod emit;
mod profile;

pub use emit::{emit_curves, emit_records, load_curves, load_records, Format};
pub use profile::{dolan_more, Metric, ProfileCurve, METRIC_FLOOR};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::baselines::fixed_point;
use crate::error::{Error, Result};
use crate::neqsolvers::{solve, SolverConfig};
use crate::probgen::GeneratedProblem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// The coupled Newton–Schulz / PDTLS iteration.
    Nonlinear,
    /// The plain substitution stand-in.
    FixedPoint,
}

/// `nonlinear`, `fixed-point`, or a case-pinned form `nonlinear1`…`3`, `fp1`…`3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolverId {
    pub family: Family,
    /// Restricts the solver to problems of this case.
    pub case: Option<u8>,
}

impl SolverId {
    pub fn applies_to(&self, case_label: &str) -> bool {
        match self.case {
            None => true,
            Some(c) => case_label == c.to_string(),
        }
    }
}

impl FromStr for SolverId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = if let Some(rest) = s.strip_prefix("nonlinear") {
            (Family::Nonlinear, rest)
        } else if s == "fixed-point" {
            (Family::FixedPoint, "")
        } else if let Some(rest) = s.strip_prefix("fp") {
            if rest.is_empty() {
                return Err(Error::UnknownSolverId(s.to_string()));
            }
            (Family::FixedPoint, rest)
        } else {
            return Err(Error::UnknownSolverId(s.to_string()));
        };
        let case = match rest {
            "" => None,
            "1" => Some(1),
            "2" => Some(2),
            "3" => Some(3),
            _ => return Err(Error::UnknownSolverId(s.to_string())),
        };
        Ok(SolverId { family, case })
    }
}

impl fmt::Display for SolverId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.case) {
            (Family::Nonlinear, None) => write!(f, "nonlinear"),
            (Family::Nonlinear, Some(c)) => write!(f, "nonlinear{c}"),
            (Family::FixedPoint, None) => write!(f, "fixed-point"),
            (Family::FixedPoint, Some(c)) => write!(f, "fp{c}"),
        }
    }
}

/// One `(solver, problem)` outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerfRecord {
    pub solver: String,
    pub problem: String,
    pub case: String,
    pub n: usize,
    pub time_s: f64,
    /// Final stopping residual; absent when the run broke down.
    #[serde(rename = "E")]
    pub e: Option<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Runs every solver on every problem, sequentially.
///
/// Numerical breakdowns become `converged = false` records with `E` absent;
/// input errors abort the suite. Records are sorted by `(problem, solver)`.
pub fn run_suite<S: AsRef<str>>(
    problems: &[GeneratedProblem],
    solvers: &[S],
    cfg: &SolverConfig,
) -> Result<Vec<PerfRecord>> {
    if solvers.is_empty() {
        return Err(Error::EmptyInput("no solvers given".into()));
    }
    if problems.is_empty() {
        return Err(Error::EmptyInput("no problems given".into()));
    }
    let ids = solvers
        .iter()
        .map(|s| s.as_ref().parse::<SolverId>())
        .collect::<Result<Vec<_>>>()?;
    for id in &ids {
        if let Some(p) = problems.iter().find(|p| !id.applies_to(p.spec.case_label())) {
            return Err(Error::IncompatibleSolver {
                solver: id.to_string(),
                case: p.spec.case_label().to_string(),
            });
        }
    }

    let mut records = Vec::with_capacity(ids.len() * problems.len());
    for problem in problems {
        for (id, label) in ids.iter().zip(solvers) {
            records.push(run_one(problem, *id, label.as_ref(), cfg)?);
        }
    }
    records.sort_by(|a, b| (&a.problem, &a.solver).cmp(&(&b.problem, &b.solver)));
    Ok(records)
}

fn run_one(problem: &GeneratedProblem, id: SolverId, label: &str, cfg: &SolverConfig) -> Result<PerfRecord> {
    let start = Instant::now();
    let outcome = match id.family {
        Family::Nonlinear => solve(&problem.spec, cfg),
        Family::FixedPoint => fixed_point(&problem.spec, cfg),
    };
    let time_s = start.elapsed().as_secs_f64();
    let (e, iterations, converged) = match outcome {
        Ok(r) => (Some(r.e).filter(|e| e.is_finite()), r.iterations, r.converged),
        Err(err) if err.is_numerical() => {
            let at = match err {
                Error::Breakdown { iteration, .. } | Error::IterateNotPositiveDefinite { iteration } => {
                    iteration
                }
                _ => 0,
            };
            (None, at, false)
        }
        Err(err) => return Err(err),
    };
    Ok(PerfRecord {
        solver: label.to_string(),
        problem: problem.name.clone(),
        case: problem.spec.case_label().to_string(),
        n: problem.spec.dim(),
        time_s,
        e,
        iterations,
        converged,
    })
}
