use std::time::Instant;

use super::config::{check_custom_dims, stop_check, Init, SolverConfig};
use super::{min_eigenvalue, true_residual, EquationSpec, SolveReport};
use crate::error::{Error, Result};
use crate::matkernel::{newton_schulz_step, spd_power, Matrix, SpdMatrix, SymMatrix};
use crate::pdtls::pdtls_chol;

/// Solves `X + AᵀX⁻¹A = Q`.
///
/// Iterates `Y ← Y(2I − XY)`, `X ← PDTLS(I, Q − AᵀYA)`. The stopping
/// residual `‖X + AᵀYA − Q‖_F` is taken with `Y` already advanced against the
/// new `X`; with the pre-advance `Y` the PDTLS step makes it vanish whenever
/// `Q − AᵀYA` is SPD, regardless of whether `Y ≈ X⁻¹`.
pub fn solve_case1(a: &Matrix, q: &SpdMatrix, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    let spec = EquationSpec::Case1 {
        a: a.clone(),
        q: q.clone(),
    };
    spec.validate()?;
    let n = q.dim();
    let start = Instant::now();

    let (x0, y0) = initial_pair(q, cfg)?;
    let mut y = newton_schulz_step(&y0, &x0)?;
    let mut coupling = a.congruence(&y)?;
    let mut x = SpdMatrix::new(x0).map_err(|_| Error::IterateNotPositiveDefinite { iteration: 0 })?;
    let identity = Matrix::identity(n);

    let mut history = Vec::new();
    let mut min_eigs = Vec::new();
    let mut converged = false;
    let mut e = f64::INFINITY;
    let mut iterations = 0;
    for k in 1..=cfg.max_iter {
        iterations = k;
        let target = q.try_sub(&coupling)?;
        x = pdtls_chol(&identity, &target).map_err(|err| Error::breakdown(k, err))?;
        y = newton_schulz_step(&y, &x)?;
        coupling = a.congruence(&y)?;
        e = x.try_add(&coupling)?.try_sub(q)?.fro_norm();
        history.push(e);
        if cfg.track_min_eigenvalue {
            min_eigs.push(min_eigenvalue(&x)?);
        }
        if stop_check(e, x.fro_norm(), cfg) {
            converged = true;
            break;
        }
    }
    let wall_time = start.elapsed().as_secs_f64();
    let true_residual = true_residual(&spec, &x)?;
    Ok(SolveReport {
        x,
        y,
        u: None,
        e,
        true_residual,
        iterations,
        converged,
        residual_history: history,
        min_eigenvalue_history: min_eigs,
        wall_time,
    })
}

pub(super) fn residual(a: &Matrix, q: &SpdMatrix, x: &SymMatrix, y: &SymMatrix) -> Result<f64> {
    Ok(x.try_add(&a.congruence(y)?)?.try_sub(q)?.fro_norm())
}

/// `(X₀, Y₀)` for the cases that carry both iterates.
pub(super) fn initial_pair(q: &SpdMatrix, cfg: &SolverConfig) -> Result<(SymMatrix, SymMatrix)> {
    let n = q.dim();
    Ok(match &cfg.init {
        Init::Identity => (SymMatrix::identity(n), SymMatrix::identity(n)),
        Init::QBased => (q.as_sym().clone(), spd_power(q, -1.0)?.into_sym()),
        Init::Custom { x0, y0 } => {
            check_custom_dims(x0, y0, n)?;
            (x0.as_sym().clone(), y0.as_sym().clone())
        }
    })
}
