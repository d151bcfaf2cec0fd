#![allow(dead_code)]

pub mod oracle;

use proptest::prelude::*;
use spdsolve::matkernel::{Matrix, SpdMatrix, SymMatrix};

pub fn general(n: usize, m: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-1.0f64..1.0, n * m)
        .prop_map(move |v| Matrix::from_row_major(n, m, v).unwrap())
}

pub fn symmetric(max_n: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max_n).prop_flat_map(|n| general(n, n).prop_map(|g| SymMatrix::symmetrize(&g).unwrap()))
}

/// `G·Gᵀ/n + shift·I`, comfortably conditioned.
pub fn spd(max_n: usize, shift: f64) -> impl Strategy<Value = SpdMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        general(n, n).prop_map(move |g| spd_from(&g, shift))
    })
}

pub fn spd_from(g: &Matrix, shift: f64) -> SpdMatrix {
    let n = g.rows();
    let m = g
        .matmul(&g.transpose())
        .unwrap()
        .scale(1.0 / n as f64)
        .try_add(&Matrix::identity(n).scale(shift))
        .unwrap();
    SpdMatrix::from_matrix(SymMatrix::symmetrize(&m).unwrap().into_matrix()).unwrap()
}

pub fn rel_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.try_sub(b).unwrap().fro_norm() / b.fro_norm().max(f64::MIN_POSITIVE)
}
