use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PerfRecord;
use crate::error::{Error, Result};

/// Solved metric values are clamped up to this before taking ratios.
pub const METRIC_FLOOR: f64 = 1e-16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Time,
    Error,
}

impl Metric {
    /// The metric value when the record counts as solved under this metric.
    ///
    /// Time needs a converged run; error only needs a finite final `E`.
    fn value(self, r: &PerfRecord) -> Option<f64> {
        let v = match self {
            Metric::Time => r.converged.then_some(r.time_s),
            Metric::Error => r.e,
        }?;
        v.is_finite().then(|| v.max(METRIC_FLOOR))
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Time => "time",
            Metric::Error => "error",
        })
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "time" => Ok(Metric::Time),
            "error" => Ok(Metric::Error),
            _ => Err(Error::InvalidInput(format!("unknown metric `{s}`"))),
        }
    }
}

/// `ρ_s(τ)` sampled on a grid shared by all solvers of one profile.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileCurve {
    pub solver: String,
    pub metric: Metric,
    /// `(τ, ρ)` with τ ascending from 1.
    pub points: Vec<(f64, f64)>,
}

impl ProfileCurve {
    pub fn rho_at(&self, tau: f64) -> f64 {
        self.points
            .iter()
            .take_while(|(t, _)| *t <= tau)
            .last()
            .map_or(0.0, |&(_, r)| r)
    }

    pub fn terminal_rho(&self) -> f64 {
        self.points.last().map_or(0.0, |&(_, r)| r)
    }
}

/// Dolan–Moré performance profiles.
///
/// `r_{p,s} = m_{p,s} / min_s m_{p,s}`, with `r = ∞` for unsolved or missing
/// pairs, and `ρ_s(τ) = |{p : r_{p,s} ≤ τ}| / |P|`. Curves are evaluated at
/// τ = 1 and at every finite ratio, sorted by solver id.
pub fn dolan_more(records: &[PerfRecord], metric: Metric) -> Result<Vec<ProfileCurve>> {
    if records.is_empty() {
        return Err(Error::EmptyInput("no performance records".into()));
    }
    let solvers: BTreeSet<&str> = records.iter().map(|r| r.solver.as_str()).collect();
    let mut table: BTreeMap<&str, BTreeMap<&str, Option<f64>>> = BTreeMap::new();
    for r in records {
        let row = table.entry(r.problem.as_str()).or_default();
        if row.insert(r.solver.as_str(), metric.value(r)).is_some() {
            return Err(Error::InvalidInput(format!(
                "duplicate record for solver `{}` on problem `{}`",
                r.solver, r.problem
            )));
        }
    }

    let mut ratios: BTreeMap<&str, Vec<f64>> = solvers.iter().map(|&s| (s, Vec::new())).collect();
    for row in table.values() {
        let best = row.values().flatten().copied().fold(f64::INFINITY, f64::min);
        for &s in &solvers {
            let r = match row.get(s).copied().flatten() {
                Some(m) if best.is_finite() => m / best,
                _ => f64::INFINITY,
            };
            ratios.get_mut(s).expect("all solvers seeded").push(r);
        }
    }

    let mut grid: Vec<f64> = ratios
        .values()
        .flatten()
        .copied()
        .filter(|r| r.is_finite())
        .chain(std::iter::once(1.0))
        .collect();
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let n_problems = table.len() as f64;
    Ok(ratios
        .into_iter()
        .map(|(solver, mut rs)| {
            rs.sort_by(f64::total_cmp);
            let mut k = 0;
            let points = grid
                .iter()
                .map(|&tau| {
                    while k < rs.len() && rs[k] <= tau {
                        k += 1;
                    }
                    (tau, k as f64 / n_problems)
                })
                .collect();
            ProfileCurve {
                solver: solver.to_string(),
                metric,
                points,
            }
        })
        .collect())
}
