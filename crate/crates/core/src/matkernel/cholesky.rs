use super::dense::Matrix;
use super::sym::SymMatrix;
use crate::error::{Error, Result};

/// Relative pivot tolerance: a pivot at or below `CHOLESKY_TOL * ‖M‖_F` is a failure.
pub const CHOLESKY_TOL: f64 = 1e-13;

/// Lower-triangular square matrix; entries above the diagonal are exactly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerTriangular(Matrix);

impl LowerTriangular {
    pub fn identity(n: usize) -> Self {
        LowerTriangular(Matrix::identity(n))
    }

    /// Takes the lower triangle of `m`, zeroing everything above the diagonal.
    pub fn from_lower(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch("triangular factor must be square".into()));
        }
        Ok(LowerTriangular(Matrix::from_fn(m.rows(), m.cols(), |i, j| {
            if j <= i {
                m.get(i, j)
            } else {
                0.0
            }
        })))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    /// `L · Lᵀ`.
    pub fn gram(&self) -> Matrix {
        self.0
            .matmul(&self.0.transpose())
            .expect("square factor")
            .symmetric_part()
    }

    /// Solves `L · X = B` by forward substitution.
    pub fn solve_lower(&self, b: &Matrix) -> Result<Matrix> {
        let n = self.dim();
        if b.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "lower solve: factor is {n}x{n}, rhs has {} rows",
                b.rows()
            )));
        }
        let m = b.cols();
        let mut x = b.clone();
        for i in 0..n {
            let lii = self.0.get(i, i);
            for k in 0..i {
                let lik = self.0.get(i, k);
                if lik == 0.0 {
                    continue;
                }
                for j in 0..m {
                    let v = x.get(i, j) - lik * x.get(k, j);
                    x.set(i, j, v);
                }
            }
            for j in 0..m {
                x.set(i, j, x.get(i, j) / lii);
            }
        }
        Ok(x)
    }

    /// Solves `Lᵀ · X = B` by back substitution.
    pub fn solve_upper_transposed(&self, b: &Matrix) -> Result<Matrix> {
        let n = self.dim();
        if b.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "upper solve: factor is {n}x{n}, rhs has {} rows",
                b.rows()
            )));
        }
        let m = b.cols();
        let mut x = b.clone();
        for i in (0..n).rev() {
            let lii = self.0.get(i, i);
            for k in (i + 1)..n {
                // (Lᵀ)_{ik} = L_{ki}
                let lki = self.0.get(k, i);
                if lki == 0.0 {
                    continue;
                }
                for j in 0..m {
                    let v = x.get(i, j) - lki * x.get(k, j);
                    x.set(i, j, v);
                }
            }
            for j in 0..m {
                x.set(i, j, x.get(i, j) / lii);
            }
        }
        Ok(x)
    }
}

/// Cholesky factorization `M = L·Lᵀ`.
pub fn cholesky(m: &SymMatrix) -> Result<LowerTriangular> {
    let n = m.dim();
    let floor = CHOLESKY_TOL * m.fro_norm();
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut d = m.get(j, j);
        for k in 0..j {
            d -= l.get(j, k) * l.get(j, k);
        }
        if !(d > floor) {
            return Err(Error::NotPositiveDefinite(format!(
                "Cholesky pivot {j} is {d:.3e} (floor {floor:.3e})"
            )));
        }
        let ljj = d.sqrt();
        l.set(j, j, ljj);
        for i in (j + 1)..n {
            let mut s = m.get(i, j);
            for k in 0..j {
                s -= l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, s / ljj);
        }
    }
    Ok(LowerTriangular(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[&[f64]]) -> SymMatrix {
        SymMatrix::from_matrix(Matrix::from_rows(rows).unwrap(), 0.0).unwrap()
    }

    #[test]
    fn identity_and_diagonal() {
        let l = cholesky(&SymMatrix::identity(3)).unwrap();
        assert_eq!(l.as_matrix(), &Matrix::identity(3));
        let l = cholesky(&SymMatrix::from_diag(&[4.0, 9.0])).unwrap();
        assert_eq!(l.as_matrix(), &Matrix::from_diag(&[2.0, 3.0]));
    }

    #[test]
    fn two_by_two_reconstructs() {
        let m = sym(&[&[4.0, 2.0], &[2.0, 3.0]]);
        let l = cholesky(&m).unwrap();
        let expected = Matrix::from_rows(&[[2.0, 0.0], [1.0, 2f64.sqrt()]]).unwrap();
        assert!(l.as_matrix().max_abs_diff(&expected) < 1e-15);
        // L·Lᵀ by direct multiplication
        assert!(l.gram().max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn rejects_indefinite_and_singular() {
        assert!(cholesky(&sym(&[&[1.0, 2.0], &[2.0, 1.0]])).is_err());
        assert!(cholesky(&sym(&[&[1.0, 1.0], &[1.0, 1.0]])).is_err());
        assert!(cholesky(&sym(&[&[0.0]])).is_err());
    }

    #[test]
    fn triangular_solves_invert_the_factor() {
        let m = sym(&[&[4.0, 2.0, 0.4], &[2.0, 3.0, 0.5], &[0.4, 0.5, 2.0]]);
        let l = cholesky(&m).unwrap();
        let b = Matrix::from_fn(3, 2, |i, j| (i + 2 * j) as f64 - 1.0);
        let x = l.solve_lower(&b).unwrap();
        assert!(l.as_matrix().matmul(&x).unwrap().max_abs_diff(&b) < 1e-14);
        let y = l.solve_upper_transposed(&b).unwrap();
        let lt = l.as_matrix().transpose();
        assert!(lt.matmul(&y).unwrap().max_abs_diff(&b) < 1e-14);
    }
}
