//! Symmetric eigendecomposition by cyclic Jacobi rotations, and the spectral
//! functions built on it (fractional powers, singular values).

use super::dense::Matrix;
use super::sym::{SpdMatrix, SymMatrix};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
/// Off-diagonal Frobenius mass, relative to `‖M‖_F`, at which a sweep loop stops.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Eigenvalues at or below this fraction of `λ_max` are treated as nonpositive.
pub const SPECTRAL_FLOOR: f64 = 1e-13;

/// `M = V · diag(values) · Vᵀ` with `values` ascending.
#[derive(Clone, Debug)]
pub struct EigenDecomp {
    pub vectors: Matrix,
    pub values: Vec<f64>,
}

impl EigenDecomp {
    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    pub fn max_value(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `V · diag(f(λ)) · Vᵀ`.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let n = self.values.len();
        let fv: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        let scaled = Matrix::from_fn(n, n, |i, j| self.vectors.get(i, j) * fv[j]);
        let vt = self.vectors.transpose();
        let full = scaled.matmul(&vt).expect("square eigenvectors");
        SymMatrix::symmetrize(&full).expect("finite spectral function")
    }

    /// Fails unless every eigenvalue exceeds `SPECTRAL_FLOOR · λ_max`.
    pub fn check_positive(&self) -> Result<()> {
        let hi = self.max_value();
        let lo = self.min_value();
        if !(hi > 0.0) || !(lo > SPECTRAL_FLOOR * hi) {
            return Err(Error::NotPositiveDefinite(format!(
                "eigenvalue range [{lo:.3e}, {hi:.3e}] is not safely positive"
            )));
        }
        Ok(())
    }

    /// `M^p` for a positive definite decomposition.
    pub fn power(&self, p: f64) -> Result<SpdMatrix> {
        self.check_positive()?;
        let m = if p == 1.0 {
            self.map_values(|v| v)
        } else if p == 0.5 {
            self.map_values(f64::sqrt)
        } else if p == -1.0 {
            self.map_values(|v| 1.0 / v)
        } else {
            self.map_values(|v| v.powf(p))
        };
        SpdMatrix::new(m)
    }
}

/// Symmetric eigendecomposition, eigenvalues ascending.
pub fn sym_eigen(m: &SymMatrix) -> Result<EigenDecomp> {
    let n = m.dim();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = m.fro_norm();
    let target = OFF_DIAGONAL_TOL * scale;

    let mut converged = scale == 0.0;
    let mut sweep = 0;
    while !converged {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            converged = true;
            break;
        }
        if sweep == MAX_SWEEPS {
            break;
        }
        sweep += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| v[r * n + order[c]]);
    Ok(EigenDecomp { vectors, values })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let g = a[r * n + p];
        let h = a[r * n + q];
        let gp = g - s * (h + g * tau);
        let hq = h + s * (g - h * tau);
        a[r * n + p] = gp;
        a[p * n + r] = gp;
        a[r * n + q] = hq;
        a[q * n + r] = hq;
    }
    for r in 0..n {
        let g = v[r * n + p];
        let h = v[r * n + q];
        v[r * n + p] = g - s * (h + g * tau);
        v[r * n + q] = h + s * (g - h * tau);
    }
}

/// `M^p` for SPD `M` and any finite real `p`. Eigenvalues are never clamped.
pub fn spd_power(m: &SymMatrix, p: f64) -> Result<SpdMatrix> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(format!("exponent must be finite, got {p}")));
    }
    sym_eigen(m)?.power(p)
}

/// Singular values of `m`, ascending, as `√eig(MᵀM)`.
pub fn singular_values(m: &Matrix) -> Result<Vec<f64>> {
    let gram = SymMatrix::symmetrize(&m.transpose_mul(m)?)?;
    let eig = sym_eigen(&gram)?;
    Ok(eig.values.iter().map(|&l| l.max(0.0).sqrt()).collect())
}

/// Largest singular value.
pub fn spectral_norm(m: &Matrix) -> Result<f64> {
    Ok(*singular_values(m)?.last().expect("nonempty"))
}
