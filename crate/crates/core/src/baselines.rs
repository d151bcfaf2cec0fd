//! Plain fixed-point iterations, used as comparison stand-ins in benchmarks.
//!
//! Each equation is rearranged into `X = g(X)` and iterated from `X₀ = Q^{1/s}`.
//! These are the canonical substitution maps, not reconstructions of any
//! particular published comparator. Stopping and reporting follow the
//! coupled solvers exactly so profiles compare like with like.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::matkernel::{spd_power, sym_eigen, EigenDecomp, Matrix, SpdMatrix, SymMatrix};
use crate::neqsolvers::{stop_check, EquationSpec, SolveReport, SolverConfig};

/// `X_{k+1} = Q − AᵀX_k⁻¹A`.
pub fn fixed_point_case1(a: &Matrix, q: &SpdMatrix, cfg: &SolverConfig) -> Result<SolveReport> {
    fixed_point(
        &EquationSpec::Case1 {
            a: a.clone(),
            q: q.clone(),
        },
        cfg,
    )
}

/// `X_{k+1} = Q + AᵀX_k⁻²A`.
pub fn fixed_point_case2(a: &Matrix, q: &SpdMatrix, cfg: &SolverConfig) -> Result<SolveReport> {
    fixed_point(
        &EquationSpec::Case2 {
            a: a.clone(),
            q: q.clone(),
        },
        cfg,
    )
}

/// `X_{k+1} = (Q − A1ᵀX_k^{−t1}A1 − A2ᵀX_k^{−t2}A2)^{1/s}`.
#[allow(clippy::too_many_arguments)]
pub fn fixed_point_case3(
    a1: &Matrix,
    a2: &Matrix,
    q: &SpdMatrix,
    s: f64,
    t1: f64,
    t2: f64,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    fixed_point(
        &EquationSpec::Case3 {
            a1: a1.clone(),
            a2: a2.clone(),
            q: q.clone(),
            s,
            t1,
            t2,
        },
        cfg,
    )
}

pub fn fixed_point_general(
    a_list: &[Matrix],
    t_list: &[f64],
    s: f64,
    q: &SpdMatrix,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    fixed_point(
        &EquationSpec::General {
            a_list: a_list.to_vec(),
            t_list: t_list.to_vec(),
            s,
            q: q.clone(),
        },
        cfg,
    )
}

/// Runs the fixed-point map matching `spec`. `cfg.init` is ignored; the
/// start is always `Q^{1/s}`.
pub fn fixed_point(spec: &EquationSpec, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    spec.validate()?;
    let q = spec.q();
    let s = spec.s();
    let start = Instant::now();

    let mut x = if s == 1.0 {
        q.clone()
    } else {
        spd_power(q, 1.0 / s)?
    };
    let mut eig = sym_eigen(&x)?;
    let mut coupling = coupling(spec, &eig)?;

    let mut history = Vec::new();
    let mut min_eigs = Vec::new();
    let mut converged = false;
    let mut e = f64::INFINITY;
    let mut iterations = 0;
    for k in 1..=cfg.max_iter {
        iterations = k;
        let leave = |_| Error::IterateNotPositiveDefinite { iteration: k };
        let base = match spec {
            EquationSpec::Case2 { .. } => q.try_add(&coupling)?,
            _ => q.try_sub(&coupling)?,
        };
        let base = SymMatrix::symmetrize(&base)?;
        x = if s == 1.0 {
            SpdMatrix::new(base).map_err(leave)?
        } else {
            spd_power(&base, 1.0 / s).map_err(leave)?
        };
        eig = sym_eigen(&x).map_err(|err| Error::breakdown(k, err))?;
        eig.check_positive().map_err(leave)?;
        coupling = coupling_of(spec, &eig)?;
        e = residual(spec, &x, &eig, &coupling)?;
        if !e.is_finite() {
            return Err(Error::breakdown(
                k,
                Error::NotPositiveDefinite("fixed-point iterate overflowed".into()),
            ));
        }
        history.push(e);
        if cfg.track_min_eigenvalue {
            min_eigs.push(eig.min_value());
        }
        if stop_check(e, x.fro_norm(), cfg) {
            converged = true;
            break;
        }
    }
    let wall_time = start.elapsed().as_secs_f64();
    let y = eig.map_values(|v| 1.0 / v);
    let true_residual = crate::neqsolvers::true_residual(spec, &x)?;
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

// The start X₀ = Q^{1/s} is SPD, so a failure here is a caller error
// rather than a breakdown.
fn coupling(spec: &EquationSpec, eig: &EigenDecomp) -> Result<Matrix> {
    eig.check_positive()?;
    coupling_of(spec, eig)
}

/// `AᵀX⁻¹A`, `AᵀX⁻²A` or `Σ AᵢᵀX^{−tᵢ}Aᵢ` from an eigendecomposition of `X`.
fn coupling_of(spec: &EquationSpec, eig: &EigenDecomp) -> Result<Matrix> {
    match spec {
        EquationSpec::Case1 { a, .. } => a.congruence(&eig.map_values(|v| 1.0 / v)),
        EquationSpec::Case2 { a, .. } => a.congruence(&eig.map_values(|v| 1.0 / (v * v))),
        _ => {
            let (a_list, t_list) = spec.power_terms().expect("power-sum variant");
            let n = spec.dim();
            let mut acc = Matrix::zeros(n, n);
            for (a, t) in a_list.into_iter().zip(t_list) {
                acc = acc.try_add(&a.congruence(&eig.map_values(|v| v.powf(-t)))?)?;
            }
            Ok(acc)
        }
    }
}

fn residual(spec: &EquationSpec, x: &SpdMatrix, eig: &EigenDecomp, coupling: &Matrix) -> Result<f64> {
    let q = spec.q();
    let lhs = match spec {
        EquationSpec::Case1 { .. } => x.try_add(coupling)?,
        EquationSpec::Case2 { .. } => x.try_sub(coupling)?,
        _ => {
            let s = spec.s();
            let xs = if s == 1.0 {
                x.as_matrix().clone()
            } else {
                eig.map_values(|v| v.powf(s)).into_matrix()
            };
            xs.try_add(coupling)?
        }
    };
    Ok(lhs.try_sub(q)?.fro_norm())
}
