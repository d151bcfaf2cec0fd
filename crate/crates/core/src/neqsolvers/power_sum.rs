use std::time::Instant;

use super::config::{check_custom_dims, stop_check, Init, SolverConfig};
use super::{min_eigenvalue, true_residual, EquationSpec, SolveReport};
use crate::error::{Error, Result};
use crate::matkernel::{newton_schulz_step, spd_power, sym_eigen, Matrix, SpdMatrix, SymMatrix};
use crate::pdtls::pdtls_chol;

/// Solves `Xˢ + A1ᵀX^{−t1}A1 + A2ᵀX^{−t2}A2 = Q`; identical to
/// [`solve_general`] with the two terms `[A1, A2]`, `[t1, t2]`.
#[allow(clippy::too_many_arguments)]
pub fn solve_case3(
    a1: &Matrix,
    a2: &Matrix,
    q: &SpdMatrix,
    s: f64,
    t1: f64,
    t2: f64,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let spec = EquationSpec::Case3 {
        a1: a1.clone(),
        a2: a2.clone(),
        q: q.clone(),
        s,
        t1,
        t2,
    };
    run(&spec, &[a1, a2], &[t1, t2], s, q, cfg)
}

/// Solves `Xˢ + Σᵢ AᵢᵀX^{−tᵢ}Aᵢ = Q`.
///
/// Per iteration: `U ← PDTLS(I, Q − Σ AᵢᵀY^{tᵢ}Aᵢ)`, `X ← U^{1/s}`,
/// `Y ← Y(2I − XY)`, and `E = ‖U + Σ AᵢᵀY^{tᵢ}Aᵢ − Q‖_F` with the updated `Y`.
pub fn solve_general(
    a_list: &[Matrix],
    t_list: &[f64],
    s: f64,
    q: &SpdMatrix,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let spec = EquationSpec::General {
        a_list: a_list.to_vec(),
        t_list: t_list.to_vec(),
        s,
        q: q.clone(),
    };
    let refs: Vec<&Matrix> = a_list.iter().collect();
    run(&spec, &refs, t_list, s, q, cfg)
}

fn run(
    spec: &EquationSpec,
    a_list: &[&Matrix],
    t_list: &[f64],
    s: f64,
    q: &SpdMatrix,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    cfg.validate()?;
    spec.validate()?;
    let n = q.dim();
    let start = Instant::now();

    let mut y = initial_inverse(q, s, cfg)?;
    let mut sum = term_sum(a_list, t_list, &y).map_err(|err| Error::breakdown(0, err))?;
    let identity = Matrix::identity(n);

    let mut history = Vec::new();
    let mut min_eigs = Vec::new();
    let mut converged = false;
    let mut e = f64::INFINITY;
    let mut iterations = 0;
    let mut u = SpdMatrix::identity(n);
    let mut x = SpdMatrix::identity(n);
    for k in 1..=cfg.max_iter {
        iterations = k;
        let target = q.try_sub(&sum)?;
        u = pdtls_chol(&identity, &target).map_err(|err| Error::breakdown(k, err))?;
        x = if s == 1.0 {
            u.clone()
        } else {
            spd_power(&u, 1.0 / s).map_err(|err| Error::breakdown(k, err))?
        };
        y = newton_schulz_step(&y, &x)?;
        sum = term_sum(a_list, t_list, &y).map_err(|err| Error::breakdown(k, err))?;
        e = residual(&u, &sum, q)?;
        history.push(e);
        if cfg.track_min_eigenvalue {
            min_eigs.push(min_eigenvalue(&x)?);
        }
        if stop_check(e, u.fro_norm(), cfg) {
            converged = true;
            break;
        }
    }
    let wall_time = start.elapsed().as_secs_f64();
    let true_residual = true_residual(spec, &x)?;
    Ok(SolveReport {
        x,
        y,
        u: Some(u),
        e,
        true_residual,
        iterations,
        converged,
        residual_history: history,
        min_eigenvalue_history: min_eigs,
        wall_time,
    })
}

fn initial_inverse(q: &SpdMatrix, s: f64, cfg: &SolverConfig) -> Result<SymMatrix> {
    let n = q.dim();
    Ok(match &cfg.init {
        Init::Identity => SymMatrix::identity(n),
        Init::QBased => {
            let factor = (cfg.gamma + 1.0) / (2.0 * cfg.gamma);
            spd_power(q, -1.0 / s)?.scale(factor)
        }
        Init::Custom { x0, y0 } => {
            check_custom_dims(x0, y0, n)?;
            y0.as_sym().clone()
        }
    })
}

/// `Σᵢ AᵢᵀY^{tᵢ}Aᵢ`; one eigendecomposition of `Y` serves every fractional exponent.
pub(super) fn term_sum(a_list: &[&Matrix], t_list: &[f64], y: &SymMatrix) -> Result<Matrix> {
    let n = y.dim();
    let needs_eig = t_list.iter().any(|&t| t != 1.0);
    let eig = if needs_eig {
        let eig = sym_eigen(y)?;
        eig.check_positive()?;
        Some(eig)
    } else {
        None
    };
    let mut acc = Matrix::zeros(n, n);
    for (a, &t) in a_list.iter().zip(t_list) {
        let term = if t == 1.0 {
            a.congruence(y)?
        } else {
            let yt = eig.as_ref().expect("computed above").map_values(|v| v.powf(t));
            a.congruence(&yt)?
        };
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

pub(super) fn residual(u: &Matrix, sum: &Matrix, q: &Matrix) -> Result<f64> {
    Ok(u.try_add(sum)?.try_sub(q)?.fro_norm())
}
