use std::ops::Deref;

use super::cholesky::{cholesky, LowerTriangular};
use super::dense::Matrix;
use crate::error::{Error, Result};

/// Dense real symmetric matrix. Entry `(i, j)` and `(j, i)` are bit-identical.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix(Matrix);

impl SymMatrix {
    /// Symmetrizes `m` as `(m + mᵀ)/2`. Fails for non-square or non-finite input.
    pub fn symmetrize(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "symmetric matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_finite() {
            return Err(Error::InvalidInput("non-finite entry".into()));
        }
        Ok(SymMatrix(m.symmetric_part()))
    }

    /// Accepts `m` only if it is symmetric to within `tol` relative to `max(1, ‖m‖_F)`.
    pub fn from_matrix(m: Matrix, tol: f64) -> Result<Self> {
        if !m.is_square() || !m.is_symmetric(tol) {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        SymMatrix::symmetrize(&m)
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix(Matrix::identity(n))
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        SymMatrix(Matrix::from_diag(diag))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn scale(&self, c: f64) -> SymMatrix {
        SymMatrix(self.0.scale(c))
    }
}

impl Deref for SymMatrix {
    type Target = Matrix;
    fn deref(&self) -> &Matrix {
        &self.0
    }
}

/// Symmetric positive definite matrix, carrying its Cholesky factor as the witness.
#[derive(Clone, Debug, PartialEq)]
pub struct SpdMatrix {
    base: SymMatrix,
    factor: LowerTriangular,
}

impl SpdMatrix {
    pub fn new(base: SymMatrix) -> Result<Self> {
        let factor = cholesky(&base)?;
        Ok(SpdMatrix { base, factor })
    }

    /// Convenience: symmetry-checked, then Cholesky-checked.
    pub fn from_matrix(m: Matrix) -> Result<Self> {
        SpdMatrix::new(SymMatrix::from_matrix(m, 1e-12)?)
    }

    pub fn identity(n: usize) -> Self {
        SpdMatrix {
            base: SymMatrix::identity(n),
            factor: LowerTriangular::identity(n),
        }
    }

    pub fn cholesky_factor(&self) -> &LowerTriangular {
        &self.factor
    }

    pub fn as_sym(&self) -> &SymMatrix {
        &self.base
    }

    pub fn into_sym(self) -> SymMatrix {
        self.base
    }
}

impl Deref for SpdMatrix {
    type Target = SymMatrix;
    fn deref(&self) -> &SymMatrix {
        &self.base
    }
}
