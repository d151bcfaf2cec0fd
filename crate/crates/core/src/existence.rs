//! Sufficient solvability conditions, evaluated numerically.
//!
//! The factor-based conditions (for `X + AᵀX⁻¹A = Q` and the power-sum
//! equation) are checked against an explicit witness `(L, N…, Q)` rather than
//! by factoring `A`. The singular-value conditions for `X − AᵀX⁻²A = Q`
//! work from `A` alone.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matkernel::{spd_power, sym_eigen, Matrix, SpdMatrix, SymMatrix};

/// Relative threshold for "diagonal" and "orthogonal columns".
pub const DIAGONAL_TOL: f64 = 1e-10;

/// Factors from which `A` (or `A₁`, `A₂`) were built.
#[derive(Clone, Debug)]
pub struct FactorWitness {
    pub l: Matrix,
    pub n_list: Vec<Matrix>,
    pub q: SpdMatrix,
}

impl FactorWitness {
    pub fn new(l: Matrix, n_list: Vec<Matrix>, q: SpdMatrix) -> Result<Self> {
        let n = q.dim();
        if n_list.is_empty() || n_list.len() > 2 {
            return Err(Error::InvalidInput(format!(
                "a witness carries one or two N factors, got {}",
                n_list.len()
            )));
        }
        for m in std::iter::once(&l).chain(&n_list) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "witness factor is {}x{}, Q is {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(FactorWitness { l, n_list, q })
    }

    /// Gram matrix of the stack `[L; N₁; …]·Q^{−1/2}`.
    pub fn stacked_gram(&self) -> Result<SymMatrix> {
        let mut sum = self.l.transpose_mul(&self.l)?;
        for n in &self.n_list {
            sum = sum.try_add(&n.transpose_mul(n)?)?;
        }
        let q_inv_half = spd_power(&self.q, -0.5)?;
        SymMatrix::symmetrize(&q_inv_half.congruence(&sum)?)
    }

    /// Largest off-diagonal magnitude of [`Self::stacked_gram`] over its Frobenius norm.
    pub fn off_diagonal_ratio(&self) -> Result<f64> {
        let g = self.stacked_gram()?;
        let n = g.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(g.get(i, j).abs());
                }
            }
        }
        let scale = g.fro_norm();
        Ok(if scale > 0.0 { worst / scale } else { 0.0 })
    }
}

/// Slack of each singular-value condition; positive means satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Margins {
    /// `λ_min(AAᵀ) − α²(α−1)`.
    pub lower_bound: f64,
    /// `1 − λ_max(√(AAᵀ/(α−1)) − AAᵀ/α²)`.
    pub root_bound: f64,
    /// `1 − ‖A‖₂²/(2α(α−1)²)`.
    pub norm_bound: f64,
}

impl Margins {
    pub fn all_positive(&self) -> bool {
        self.lower_bound > 0.0 && self.root_bound > 0.0 && self.norm_bound > 0.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExistenceCertificate {
    pub alpha: f64,
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub margins: Margins,
}

/// Witness condition for `X + AᵀX⁻¹A = Q` with `A = (LᵀL)^{1/2}N`:
/// `Q^{−1/2}(LᵀL + NᵀN)Q^{−1/2}` must be diagonal.
pub fn check_theorem2(w: &FactorWitness) -> Result<bool> {
    if w.n_list.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "expected one N factor, got {}",
            w.n_list.len()
        )));
    }
    Ok(w.off_diagonal_ratio()? <= DIAGONAL_TOL)
}

/// Witness condition for the two-term power-sum equation:
/// `[L; N₁; N₂]·Q^{−1/2}` must have orthogonal columns.
pub fn check_theorem1(w: &FactorWitness, s: f64, t1: f64, t2: f64) -> Result<bool> {
    if w.n_list.len() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected two N factors, got {}",
            w.n_list.len()
        )));
    }
    if !(s > 0.0) || !(t1 > 0.0 && t1 <= 1.0) || !(t2 > 0.0 && t2 <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "need s > 0 and t1, t2 in (0, 1], got s={s}, t1={t1}, t2={t2}"
        )));
    }
    Ok(w.off_diagonal_ratio()? <= DIAGONAL_TOL)
}

/// Evaluates the three matrix inequalities on `AAᵀ` for a given `α > 2`.
pub fn check_theorem3(a: &Matrix, alpha: f64) -> Result<(bool, ExistenceCertificate)> {
    if !(alpha > 2.0) || !alpha.is_finite() {
        return Err(Error::InvalidAlpha(alpha));
    }
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "A must be square, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let aat = SymMatrix::symmetrize(&a.matmul(&a.transpose())?)?;
    let eig = sym_eigen(&aat)?;
    // Roundoff can push a zero eigenvalue of AAᵀ slightly negative.
    let mu: Vec<f64> = eig.values.iter().map(|&v| v.max(0.0)).collect();
    let mu_min = mu[0];
    let mu_max = mu[mu.len() - 1];

    // λ_max of a function of AAᵀ is the max of that function over its eigenvalues.
    let peak = mu
        .iter()
        .map(|&m| (m / (alpha - 1.0)).sqrt() - m / (alpha * alpha))
        .fold(f64::NEG_INFINITY, f64::max);
    let margins = Margins {
        lower_bound: mu_min - alpha * alpha * (alpha - 1.0),
        root_bound: 1.0 - peak,
        norm_bound: 1.0 - mu_max / (2.0 * alpha * (alpha - 1.0).powi(2)),
    };
    let cert = ExistenceCertificate {
        alpha,
        sigma_min: mu_min.sqrt(),
        sigma_max: mu_max.sqrt(),
        margins,
    };
    Ok((margins.all_positive(), cert))
}

/// `α√(α−1)`, the lower singular-value bound.
pub fn g1(alpha: f64) -> f64 {
    alpha * (alpha - 1.0).sqrt()
}

/// `√(2α)(α−1)`, the upper singular-value bound.
pub fn g2(alpha: f64) -> f64 {
    (2.0 * alpha).sqrt() * (alpha - 1.0)
}

/// Searches for `α > 2` with `g1(α) < σᵢ(A) < g2(α)` for every singular value.
///
/// Both bounds increase on `α > 2`, so the feasible set is the open interval
/// `(max(2, g2⁻¹(σ_max)), g1⁻¹(σ_min))`; its midpoint is returned.
pub fn find_alpha_theorem4(a: &Matrix) -> Result<Option<ExistenceCertificate>> {
    if !a.is_finite() {
        return Err(Error::InvalidInput("A has non-finite entries".into()));
    }
    let (_, probe) = check_theorem3(a, 3.0)?;
    let (sigma_min, sigma_max) = (probe.sigma_min, probe.sigma_max);
    // g1(2) = g2(2) = 2.
    if !(sigma_min > 2.0) {
        return Ok(None);
    }
    let hi = invert_increasing(g1, sigma_min);
    let lo = invert_increasing(g2, sigma_max).max(2.0);
    if !(lo < hi) {
        return Ok(None);
    }
    let alpha = 0.5 * (lo + hi);
    let (holds, cert) = check_theorem3(a, alpha)?;
    Ok(holds.then_some(cert))
}

/// Solves `g(α) = target` on `α ≥ 2` by bisection, for `g` increasing with `g(2) = 2`.
fn invert_increasing(g: fn(f64) -> f64, target: f64) -> f64 {
    if target <= g(2.0) {
        return 2.0;
    }
    let mut lo = 2.0;
    let mut hi = 4.0;
    while g(hi) < target {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if g(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
