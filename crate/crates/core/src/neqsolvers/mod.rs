//! Coupled Newton–Schulz / PDTLS iterations for
//! `X^s + Σ Aᵢᵀ fᵢ(X) Aᵢ = Q`.
//!
//! Each solver keeps `Y ≈ X⁻¹` with one Newton–Schulz step per iteration and
//! obtains the next `X` (or `Xˢ`) from a PDTLS subproblem, so every recorded
//! `X` iterate is SPD by construction.

mod case1;
mod case2;
mod config;
mod power_sum;
mod spec;

pub use case1::solve_case1;
pub use case2::solve_case2;
pub use config::{stop_check, Init, SolverConfig};
pub use power_sum::{solve_case3, solve_general};
pub use spec::EquationSpec;

use crate::error::Result;
use crate::matkernel::{sym_eigen, Matrix, SpdMatrix, SymMatrix};

/// Outcome of one solve.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub x: SpdMatrix,
    /// Final inverse approximation `Y`.
    pub y: SymMatrix,
    /// Final `U = PDTLS(I, ·)` of the power-sum solvers (`U ≈ Xˢ`).
    pub u: Option<SpdMatrix>,
    /// Final stopping residual.
    pub e: f64,
    /// `‖lhs(X) − Q‖_F` with exact powers of `X`.
    pub true_residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub residual_history: Vec<f64>,
    /// `λ_min(X_k)` per iteration when `SolverConfig::track_min_eigenvalue` is set.
    pub min_eigenvalue_history: Vec<f64>,
    pub wall_time: f64,
}

/// Solves any equation variant with its coupled iteration.
pub fn solve(spec: &EquationSpec, cfg: &SolverConfig) -> Result<SolveReport> {
    match spec {
        EquationSpec::Case1 { a, q } => solve_case1(a, q, cfg),
        EquationSpec::Case2 { a, q } => solve_case2(a, q, cfg),
        EquationSpec::Case3 {
            a1,
            a2,
            q,
            s,
            t1,
            t2,
        } => solve_case3(a1, a2, q, *s, *t1, *t2, cfg),
        EquationSpec::General {
            a_list,
            t_list,
            s,
            q,
        } => solve_general(a_list, t_list, *s, q, cfg),
    }
}

/// `‖lhs(X) − Q‖_F`, evaluated from one eigendecomposition of `X`.
pub fn true_residual(spec: &EquationSpec, x: &SymMatrix) -> Result<f64> {
    let eig = sym_eigen(x)?;
    eig.check_positive()?;
    let q = spec.q();
    let lhs = match spec {
        EquationSpec::Case1 { a, .. } => {
            let xinv = eig.map_values(|v| 1.0 / v);
            x.try_add(&a.congruence(&xinv)?)?
        }
        EquationSpec::Case2 { a, .. } => {
            let xinv2 = eig.map_values(|v| 1.0 / (v * v));
            x.try_sub(&a.congruence(&xinv2)?)?
        }
        _ => {
            let (a_list, t_list) = spec.power_terms().expect("power-sum variant");
            let s = spec.s();
            let mut acc = if s == 1.0 {
                x.as_matrix().clone()
            } else {
                eig.map_values(|v| v.powf(s)).into_matrix()
            };
            for (a, t) in a_list.into_iter().zip(t_list) {
                let xt = eig.map_values(|v| v.powf(-t));
                acc = acc.try_add(&a.congruence(&xt)?)?;
            }
            acc
        }
    };
    Ok(lhs.try_sub(q)?.fro_norm())
}

/// Recomputes the stopping residual from a report's final `(X, Y, U)`.
pub fn stopping_residual(spec: &EquationSpec, report: &SolveReport) -> Result<f64> {
    let q = spec.q();
    match spec {
        EquationSpec::Case1 { a, .. } => case1::residual(a, q, &report.x, &report.y),
        EquationSpec::Case2 { a, .. } => {
            let y2 = case2::square(&report.y)?;
            case2::residual(&report.x, &a.congruence(&y2)?, q)
        }
        _ => {
            let (a_list, t_list) = spec.power_terms().expect("power-sum variant");
            let u = report
                .u
                .as_ref()
                .expect("power-sum solvers always report U");
            let sum = power_sum::term_sum(&a_list, &t_list, &report.y)?;
            power_sum::residual(u, &sum, q)
        }
    }
}

fn min_eigenvalue(x: &Matrix) -> Result<f64> {
    Ok(sym_eigen(&SymMatrix::symmetrize(x)?)?.min_value())
}
