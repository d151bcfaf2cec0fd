//! Positive definite total least squares (Cholesky variant).
//!
//! For `D·X ≈ T` the total error functional
//!
//! ```text
//! f(X) = tr((D·X − T)ᵀ (D − T·X⁻¹))
//! ```
//!
//! is strictly convex on the SPD cone. The `tr(X·DᵀT·X⁻¹)` cross term is the
//! constant `tr(DᵀT)`, so stationarity reduces to the Riccati-type equation
//! `X·(DᵀD)·X = TᵀT`. With `DᵀD = L·Lᵀ` its unique SPD solution is
//! `X = L⁻ᵀ·(Lᵀ·TᵀT·L)^{1/2}·L⁻¹`, evaluated with triangular solves.

use crate::error::{Error, Result};
use crate::matkernel::{cholesky, spd_power, Matrix, SpdMatrix, SymMatrix};

/// The data `(D, T)` of an over-determined system `D·X ≈ T`.
#[derive(Clone, Debug)]
pub struct PdtlsProblem {
    d: Matrix,
    t: Matrix,
}

impl PdtlsProblem {
    pub fn new(d: Matrix, t: Matrix) -> Result<Self> {
        if d.rows() != t.rows() || d.cols() != t.cols() {
            return Err(Error::DimensionMismatch(format!(
                "D is {}x{} but T is {}x{}",
                d.rows(),
                d.cols(),
                t.rows(),
                t.cols()
            )));
        }
        if d.rows() < d.cols() {
            return Err(Error::DimensionMismatch(format!(
                "D must have at least as many rows as columns, got {}x{}",
                d.rows(),
                d.cols()
            )));
        }
        Ok(PdtlsProblem { d, t })
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn solve(&self) -> Result<SpdMatrix> {
        pdtls_chol(&self.d, &self.t)
    }

    /// The error functional evaluated literally, with `X⁻¹` from `X`'s Cholesky factor.
    pub fn objective(&self, x: &SpdMatrix) -> Result<f64> {
        let l = x.cholesky_factor();
        // T·X⁻¹ = (X⁻¹·Tᵀ)ᵀ
        let xinv_tt = l.solve_upper_transposed(&l.solve_lower(&self.t.transpose())?)?;
        let t_xinv = xinv_tt.transpose();
        let left = self.d.matmul(x)?.try_sub(&self.t)?;
        let right = self.d.try_sub(&t_xinv)?;
        Ok(left.transpose_mul(&right)?.trace())
    }
}

/// SPD minimizer of the total error functional for `D·X ≈ T`.
pub fn pdtls_chol(d: &Matrix, t: &Matrix) -> Result<SpdMatrix> {
    if d.rows() != t.rows() || d.cols() != t.cols() || d.rows() < d.cols() {
        return Err(Error::DimensionMismatch(format!(
            "PDTLS needs D, T of equal shape m×n with m ≥ n; got D {}x{}, T {}x{}",
            d.rows(),
            d.cols(),
            t.rows(),
            t.cols()
        )));
    }
    let target = SymMatrix::symmetrize(&t.transpose_mul(t)?)?;
    if is_identity(d) {
        return spd_power(&target, 0.5).map_err(singular_target);
    }

    let gram = SymMatrix::symmetrize(&d.transpose_mul(d)?)?;
    let l = cholesky(&gram).map_err(|e| match e {
        Error::NotPositiveDefinite(_) => Error::RankDeficient,
        other => other,
    })?;
    let lm = l.as_matrix();
    let congruent = SymMatrix::symmetrize(&lm.transpose_mul(&target.matmul(lm)?)?)?;
    let z = spd_power(&congruent, 0.5).map_err(singular_target)?;
    // X = L⁻ᵀ Z L⁻¹: C = L⁻ᵀ Z, then Xᵀ = L⁻ᵀ Cᵀ.
    let c = l.solve_upper_transposed(&z)?;
    let xt = l.solve_upper_transposed(&c.transpose())?;
    let x = SymMatrix::symmetrize(&xt)?;
    SpdMatrix::new(x).map_err(singular_target)
}

fn singular_target(e: Error) -> Error {
    match e {
        Error::NotPositiveDefinite(_) => Error::SingularTarget,
        other => other,
    }
}

fn is_identity(m: &Matrix) -> bool {
    m.is_square()
        && (0..m.rows()).all(|i| (0..m.cols()).all(|j| m.get(i, j) == if i == j { 1.0 } else { 0.0 }))
}
