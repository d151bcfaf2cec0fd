//! Brute-force PDTLS minimizer built only on `Vec<Vec<f64>>` arithmetic, so it
//! shares no code with the library it checks.
#![allow(dead_code, clippy::needless_range_loop)]

/// Gauss–Jordan inverse with partial pivoting; independent of the library.
pub fn inverse(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs())).unwrap();
        m.swap(c, p);
        let piv = m[c][c];
        m[c].iter_mut().for_each(|v| *v /= piv);
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                let row_c = m[c].clone();
                m[r].iter_mut().zip(&row_c).for_each(|(v, w)| *v -= f * w);
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub fn mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

pub fn transpose(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn sub(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect()).collect()
}

/// `tr((DX − T)ᵀ(D − TX⁻¹))`, taken literally.
pub fn objective(d: &[Vec<f64>], t: &[Vec<f64>], x: &[Vec<f64>]) -> f64 {
    let left = sub(&mul(d, x), t);
    let right = sub(d, &mul(t, &inverse(x)));
    let p = mul(&transpose(&left), &right);
    (0..p.len()).map(|i| p[i][i]).sum()
}

/// `X = CCᵀ` with `C` lower triangular, packed row by row.
pub fn unpack(theta: &[f64], n: usize) -> Vec<Vec<f64>> {
    let mut c = vec![vec![0.0; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in 0..=i {
            c[i][j] = theta[k];
            k += 1;
        }
    }
    mul(&c, &transpose(&c))
}

pub fn fd_gradient(f: &dyn Fn(&[f64]) -> f64, x: &[f64]) -> Vec<f64> {
    let h = 1e-6;
    (0..x.len())
        .map(|i| {
            let mut p = x.to_vec();
            let mut m = x.to_vec();
            p[i] += h;
            m[i] -= h;
            (f(&p) - f(&m)) / (2.0 * h)
        })
        .collect()
}

/// BFGS with backtracking on finite-difference gradients.
pub fn bfgs(f: &dyn Fn(&[f64]) -> f64, x0: Vec<f64>) -> Vec<f64> {
    let k = x0.len();
    let mut x = x0;
    let mut h: Vec<Vec<f64>> = (0..k).map(|i| (0..k).map(|j| f64::from(i == j)).collect()).collect();
    let mut g = fd_gradient(f, &x);
    let mut fx = f(&x);
    for _ in 0..2000 {
        let gnorm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if gnorm < 1e-11 {
            break;
        }
        let mut p: Vec<f64> = (0..k).map(|i| -(0..k).map(|j| h[i][j] * g[j]).sum::<f64>()).collect();
        if p.iter().zip(&g).map(|(a, b)| a * b).sum::<f64>() >= 0.0 {
            p = g.iter().map(|v| -v).collect();
            h = (0..k).map(|i| (0..k).map(|j| f64::from(i == j)).collect()).collect();
        }
        let mut step = 1.0;
        let slope: f64 = p.iter().zip(&g).map(|(a, b)| a * b).sum();
        let (xn, fxn) = loop {
            let xn: Vec<f64> = x.iter().zip(&p).map(|(a, b)| a + step * b).collect();
            let fxn = f(&xn);
            if fxn.is_finite() && fxn <= fx + 1e-4 * step * slope {
                break (xn, fxn);
            }
            step *= 0.5;
            if step < 1e-16 {
                return x;
            }
        };
        let gn = fd_gradient(f, &xn);
        let s: Vec<f64> = xn.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = gn.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy: f64 = s.iter().zip(&y).map(|(a, b)| a * b).sum();
        if sy > 1e-300 {
            let hy: Vec<f64> = (0..k).map(|i| (0..k).map(|j| h[i][j] * y[j]).sum()).collect();
            let yhy: f64 = y.iter().zip(&hy).map(|(a, b)| a * b).sum();
            for i in 0..k {
                for j in 0..k {
                    h[i][j] += (sy + yhy) * s[i] * s[j] / (sy * sy) - (hy[i] * s[j] + s[i] * hy[j]) / sy;
                }
            }
        }
        x = xn;
        fx = fxn;
        g = gn;
    }
    x
}

/// Minimizes the literal objective over `X = CCᵀ`, starting from `X = I`.
pub fn minimize(d: &[Vec<f64>], t: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = d[0].len();
    let f = |theta: &[f64]| objective(d, t, &unpack(theta, n));
    let start: Vec<f64> = (0..n).flat_map(|i| (0..=i).map(move |j| f64::from(i == j))).collect();
    unpack(&bfgs(&f, start), n)
}
