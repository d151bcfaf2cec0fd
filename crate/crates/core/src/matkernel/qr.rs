use super::dense::Matrix;
use crate::error::{Error, Result};

/// Thin Householder QR of an `m×n` matrix (`m ≥ n`), returning the `m×n`
/// orthonormal factor. Columns are sign-normalized so that `R` has a
/// nonnegative diagonal, which makes the factor unique for full-rank input.
pub fn orthogonal_factor(a: &Matrix) -> Result<Matrix> {
    let (m, n) = (a.rows(), a.cols());
    if m < n {
        return Err(Error::DimensionMismatch(format!(
            "thin QR needs rows >= cols, got {m}x{n}"
        )));
    }
    let mut r = a.clone();
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut diag_sign = vec![1.0; n];

    for k in 0..n {
        let norm = (k..m).map(|i| r.get(i, k).powi(2)).sum::<f64>().sqrt();
        let mut v: Vec<f64> = (k..m).map(|i| r.get(i, k)).collect();
        if norm == 0.0 {
            reflectors.push(vec![0.0; m - k]);
            continue;
        }
        let alpha = if v[0] >= 0.0 { -norm } else { norm };
        v[0] -= alpha;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm > 0.0 {
            v.iter_mut().for_each(|x| *x /= vnorm);
        }
        for j in k..n {
            let dot: f64 = (k..m).map(|i| v[i - k] * r.get(i, j)).sum();
            for i in k..m {
                let val = r.get(i, j) - 2.0 * v[i - k] * dot;
                r.set(i, j, val);
            }
        }
        diag_sign[k] = if r.get(k, k) < 0.0 { -1.0 } else { 1.0 };
        reflectors.push(v);
    }

    // Q = H_0 H_1 ... H_{n-1} applied to the first n columns of I.
    let mut q = Matrix::from_fn(m, n, |i, j| if i == j { 1.0 } else { 0.0 });
    for k in (0..n).rev() {
        let v = &reflectors[k];
        for j in 0..n {
            let dot: f64 = (k..m).map(|i| v[i - k] * q.get(i, j)).sum();
            if dot == 0.0 {
                continue;
            }
            for i in k..m {
                let val = q.get(i, j) - 2.0 * v[i - k] * dot;
                q.set(i, j, val);
            }
        }
    }
    for (j, &sgn) in diag_sign.iter().enumerate() {
        if sgn < 0.0 {
            for i in 0..m {
                q.set(i, j, -q.get(i, j));
            }
        }
    }
    Ok(q)
}
