//! Dense real symmetric matrix kernels.

mod cholesky;
mod dense;
mod eigen;
mod qr;
mod sym;

pub use cholesky::{cholesky, LowerTriangular, CHOLESKY_TOL};
pub use dense::{fro_norm, GeneralMatrix, Matrix};
pub use eigen::{
    singular_values, spd_power, spectral_norm, sym_eigen, EigenDecomp, MAX_SWEEPS,
    OFF_DIAGONAL_TOL, SPECTRAL_FLOOR,
};
pub use qr::orthogonal_factor;
pub use sym::{SpdMatrix, SymMatrix};

use crate::error::{Error, Result};

/// One Newton–Schulz inverse step `2Y − Y·X·Y`, symmetrized.
///
/// Satisfies `I − X·Y' = (I − X·Y)²` exactly in exact arithmetic.
pub fn newton_schulz_step(y: &SymMatrix, x: &SymMatrix) -> Result<SymMatrix> {
    if y.dim() != x.dim() {
        return Err(Error::DimensionMismatch(format!(
            "Newton–Schulz step with Y {0}x{0} and X {1}x{1}",
            y.dim(),
            x.dim()
        )));
    }
    let xy = x.matmul(y)?;
    let yxy = y.matmul(&xy)?;
    let r = y.scale(2.0).try_sub(&yxy)?;
    SymMatrix::symmetrize(&r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_schulz_fixed_point() {
        let i = SymMatrix::identity(3);
        let y = newton_schulz_step(&i, &i).unwrap();
        assert_eq!(y.as_matrix(), &Matrix::identity(3));
    }

    #[test]
    fn newton_schulz_scalar() {
        let y = newton_schulz_step(&SymMatrix::from_diag(&[0.4]), &SymMatrix::from_diag(&[2.0]))
            .unwrap();
        assert!((y.get(0, 0) - 0.48).abs() < 1e-15);
    }

    #[test]
    fn newton_schulz_dimension_mismatch() {
        let r = newton_schulz_step(&SymMatrix::identity(2), &SymMatrix::identity(3));
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }
}
