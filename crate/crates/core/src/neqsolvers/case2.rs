use std::time::Instant;

use super::case1::initial_pair;
use super::config::{stop_check, SolverConfig};
use super::{min_eigenvalue, true_residual, EquationSpec, SolveReport};
use crate::error::{Error, Result};
use crate::matkernel::{newton_schulz_step, spd_power, Matrix, SpdMatrix, SymMatrix};
use crate::pdtls::pdtls_chol;

/// Solves `X − AᵀX⁻²A = Q`.
///
/// Iterates `Y ← PDTLS(X, 2I − AᵀY²A·X⁻¹ − Q·X⁻¹)` followed by the
/// Newton–Schulz update `X ← X(2I − YX)` toward `Y⁻¹`. That update is not
/// PDTLS-guarded; an `X` that leaves the SPD cone is reported as
/// [`Error::IterateNotPositiveDefinite`].
pub fn solve_case2(a: &Matrix, q: &SpdMatrix, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    let spec = EquationSpec::Case2 {
        a: a.clone(),
        q: q.clone(),
    };
    spec.validate()?;
    let n = q.dim();
    let start = Instant::now();

    let (x0, y0) = initial_pair(q, cfg)?;
    let mut x = SpdMatrix::new(x0).map_err(|_| Error::IterateNotPositiveDefinite { iteration: 0 })?;
    let mut y = y0;
    let mut coupling = a.congruence(square(&y)?.as_matrix())?;
    let two_i = Matrix::identity(n).scale(2.0);

    let mut history = Vec::new();
    let mut min_eigs = Vec::new();
    let mut converged = false;
    let mut e = f64::INFINITY;
    let mut iterations = 0;
    for k in 1..=cfg.max_iter {
        iterations = k;
        let x_inv = spd_power(&x, -1.0).map_err(|err| Error::breakdown(k, err))?;
        let target = two_i.try_sub(&coupling.try_add(q)?.matmul(&x_inv)?)?;
        y = pdtls_chol(&x, &target)
            .map_err(|err| Error::breakdown(k, err))?
            .into_sym();
        let next = newton_schulz_step(&x, &y)?;
        x = SpdMatrix::new(next).map_err(|_| Error::IterateNotPositiveDefinite { iteration: k })?;
        coupling = a.congruence(square(&y)?.as_matrix())?;
        e = residual(&x, &coupling, q)?;
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

pub(super) fn square(y: &SymMatrix) -> Result<SymMatrix> {
    SymMatrix::symmetrize(&y.matmul(y)?)
}

/// `‖X − AᵀY²A − Q‖_F` given the precomputed coupling term `AᵀY²A`.
pub(super) fn residual(x: &Matrix, coupling: &Matrix, q: &Matrix) -> Result<f64> {
    Ok(x.try_sub(coupling)?.try_sub(q)?.fro_norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficient_returns_q() {
        let q = SpdMatrix::from_matrix(
            Matrix::from_rows(&[[2.0, 0.3, 0.1], [0.3, 1.0, 0.2], [0.1, 0.2, 1.5]]).unwrap(),
        )
        .unwrap();
        let r = solve_case2(&Matrix::zeros(3, 3), &q, &SolverConfig::default()).unwrap();
        assert!(r.converged);
        assert!(r.e <= 1e-14, "E = {}", r.e);
        assert!(r.x.max_abs_diff(&q) <= 1e-13);
    }
}
