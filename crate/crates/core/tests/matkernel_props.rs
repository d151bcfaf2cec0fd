mod common;

use common::{general, rel_diff, spd, spd_from, symmetric};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spdsolve::matkernel::{
    cholesky, newton_schulz_step, orthogonal_factor, singular_values, spd_power, spectral_norm,
    sym_eigen, Matrix, SymMatrix,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cholesky_reconstructs(m in spd(12, 0.1)) {
        let l = cholesky(&m).unwrap();
        let lm = l.as_matrix();
        for i in 0..m.dim() {
            prop_assert!(lm.get(i, i) > 0.0);
            for j in i + 1..m.dim() {
                prop_assert_eq!(lm.get(i, j), 0.0);
            }
        }
        prop_assert!(rel_diff(&l.gram(), &m) <= 1e-12);
    }

    #[test]
    fn eigen_contracts(m in symmetric(10)) {
        let n = m.dim();
        let eig = sym_eigen(&m).unwrap();
        let v = &eig.vectors;
        let orth = v.transpose_mul(v).unwrap().try_sub(&Matrix::identity(n)).unwrap().fro_norm();
        prop_assert!(orth <= 1e-12 * n as f64, "orthogonality {}", orth);
        let recon = eig.map_values(|x| x).try_sub(&m).unwrap().fro_norm();
        prop_assert!(recon <= 1e-11 * m.fro_norm().max(1.0), "reconstruction {}", recon);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn symmetry_is_structural(g in general(5, 5)) {
        let s = SymMatrix::symmetrize(&g).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                prop_assert_eq!(s.get(i, j).to_bits(), s.get(j, i).to_bits());
            }
        }
    }

    #[test]
    fn powers_of_one_matrix_compose(m in spd(8, 0.2), a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let pa = spd_power(&m, a).unwrap();
        let pb = spd_power(&m, b).unwrap();
        let pab = spd_power(&m, a + b).unwrap();
        prop_assert!(rel_diff(&pa.matmul(&pb).unwrap(), &pab) <= 1e-9);
    }

    #[test]
    fn inverse_power(m in spd(10, 0.1)) {
        let inv = spd_power(&m, -1.0).unwrap();
        let n = m.dim();
        let r = inv.matmul(&m).unwrap().try_sub(&Matrix::identity(n)).unwrap().fro_norm();
        prop_assert!(r <= 1e-10 * (n as f64).sqrt());
    }

    #[test]
    fn newton_schulz_identity(x in spd(10, 0.1), g in general(10, 10), c in 0.01f64..1.0) {
        let n = x.dim();
        let y = SymMatrix::symmetrize(&g.block(0, n, 0, n).scale(c)).unwrap();
        let i = Matrix::identity(n);
        let e0 = i.try_sub(&x.matmul(&y).unwrap()).unwrap();
        let y1 = newton_schulz_step(&y, &x).unwrap();
        let e1 = i.try_sub(&x.matmul(&y1).unwrap()).unwrap();
        let gap = e1.try_sub(&e0.matmul(&e0).unwrap()).unwrap().fro_norm();
        let e0n = e0.fro_norm();
        let scale = 1.0 + e0n * e0n;
        prop_assert!(gap <= 1e-12 * scale, "gap {} scale {}", gap, scale);
    }

    #[test]
    fn qr_factor_is_orthonormal(g in general(9, 4)) {
        let q = orthogonal_factor(&g).unwrap();
        let gram = q.transpose_mul(&q).unwrap();
        prop_assert!(gram.try_sub(&Matrix::identity(4)).unwrap().fro_norm() <= 1e-13);
        // R = QᵀA is upper triangular with a nonnegative diagonal.
        let r = q.transpose_mul(&g).unwrap();
        for i in 0..4 {
            prop_assert!(r.get(i, i) >= -1e-14);
            for j in 0..i {
                prop_assert!(r.get(i, j).abs() <= 1e-13);
            }
        }
    }
}

#[test]
fn square_root_squares_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = Matrix::from_fn(10, 10, |_, _| rng.gen_range(-1.0..1.0));
    let m = spd_from(&g, 0.05);
    let r = spd_power(&m, 0.5).unwrap();
    assert!(rel_diff(&r.matmul(&r).unwrap(), &m) <= 1e-10);
}

#[test]
fn singular_values_of_known_matrix() {
    // Rotation times diag(3, 0.5): singular values are exactly 0.5 and 3.
    let (c, s) = (0.6, 0.8);
    let rot = Matrix::from_rows(&[[c, -s], [s, c]]).unwrap();
    let a = rot.matmul(&Matrix::from_diag(&[3.0, 0.5])).unwrap();
    let sv = singular_values(&a).unwrap();
    assert!((sv[0] - 0.5).abs() < 1e-14 && (sv[1] - 3.0).abs() < 1e-14);
    assert!((spectral_norm(&a).unwrap() - 3.0).abs() < 1e-14);
}

#[test]
fn newton_schulz_contraction_from_norm1_start() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let g = Matrix::from_fn(6, 6, |_, _| rng.gen_range(-1.0..1.0));
    let x = spd_from(&g, 1.0);
    let mut y = SymMatrix::identity(6).scale(1.0 / x.norm1());
    let i = Matrix::identity(6);
    let r0 = spectral_norm(&i.try_sub(&x.matmul(&y).unwrap()).unwrap()).unwrap();
    assert!(r0 < 1.0);
    for k in 1..=5 {
        y = newton_schulz_step(&y, &x).unwrap();
        let rk = spectral_norm(&i.try_sub(&x.matmul(&y).unwrap()).unwrap()).unwrap();
        assert!(rk <= r0.powi(1 << k) + 1e-14, "step {k}: {rk}");
    }
}
