mod common;

use common::general;
use proptest::prelude::*;
use spdsolve::existence::{check_theorem1, check_theorem2, check_theorem3, find_alpha_theorem4, g1, g2};
use spdsolve::matkernel::{singular_values, spd_power, sym_eigen, Matrix, SymMatrix};
use spdsolve::neqsolvers::{true_residual, EquationSpec};
use spdsolve::probgen::{fixtures, gen_case1, gen_case2, gen_case3};
use spdsolve::Error;

fn planted_gram(l: &Matrix) -> SymMatrix {
    SymMatrix::symmetrize(&l.transpose_mul(l).unwrap()).unwrap()
}

#[test]
fn case1_generator_satisfies_its_condition() {
    for seed in 0..100 {
        let n = 2 + (seed as usize % 9);
        let p = gen_case1(n, seed).unwrap();
        let w = p.witness.as_ref().unwrap();
        assert!(check_theorem2(w).unwrap(), "seed {seed}");
        let x = planted_gram(&w.l);
        // Roundoff in X⁻¹ scales with the condition number of the planted solution.
        let eig = sym_eigen(&x).unwrap();
        let kappa = eig.max_value() / eig.min_value();
        assert!(true_residual(&p.spec, &x).unwrap() <= 1e-13 * kappa.max(10.0), "seed {seed}");
    }
}

#[test]
fn case2_generator_satisfies_its_condition() {
    for seed in 0..100 {
        let n = 2 + (seed as usize % 9);
        let alpha = 2.5 + (seed % 5) as f64 * 0.5;
        let p = gen_case2(n, alpha, seed).unwrap();
        let EquationSpec::Case2 { a, .. } = &p.spec else { panic!() };
        let sv = singular_values(a).unwrap();
        assert!(sv[0] > g1(alpha) - 1e-10 && sv[n - 1] < g2(alpha) + 1e-10, "seed {seed}");
        let cert = p.certificate.unwrap();
        assert!(cert.margins.all_positive(), "seed {seed}: {cert:?}");
        assert!(check_theorem3(a, cert.alpha).unwrap().0);
    }
}

#[test]
fn case3_generator_satisfies_its_condition() {
    let params = [(2.0, 0.5, 0.5), (5.0, 0.2, 0.5), (1.0, 1.0, 1.0), (3.0, 0.7, 0.3)];
    for seed in 0..100 {
        let n = 2 + (seed as usize % 9);
        let (s, t1, t2) = params[seed as usize % params.len()];
        let p = gen_case3(n, s, t1, t2, seed).unwrap();
        let w = p.witness.as_ref().unwrap();
        assert!(check_theorem1(w, s, t1, t2).unwrap(), "seed {seed}");
        let x = spd_power(&planted_gram(&w.l), 1.0 / s).unwrap();
        assert!(true_residual(&p.spec, &x).unwrap() <= 1e-11, "seed {seed}");
    }
}

#[test]
fn generators_are_deterministic() {
    let bits = |m: &Matrix| m.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
    for seed in [0, 1, 77, u64::MAX] {
        let (a, b) = (gen_case1(6, seed).unwrap(), gen_case1(6, seed).unwrap());
        let (EquationSpec::Case1 { a: x, .. }, EquationSpec::Case1 { a: y, .. }) = (&a.spec, &b.spec) else {
            panic!()
        };
        assert_eq!(bits(x), bits(y));
        let (a, b) = (gen_case2(6, 3.0, seed).unwrap(), gen_case2(6, 3.0, seed).unwrap());
        let (EquationSpec::Case2 { a: x, .. }, EquationSpec::Case2 { a: y, .. }) = (&a.spec, &b.spec) else {
            panic!()
        };
        assert_eq!(bits(x), bits(y));
        let (a, b) = (gen_case3(6, 2.0, 0.5, 0.5, seed).unwrap(), gen_case3(6, 2.0, 0.5, 0.5, seed).unwrap());
        assert_eq!(bits(&a.witness.unwrap().l), bits(&b.witness.unwrap().l));
    }
    let (a, b) = (gen_case1(4, 1).unwrap(), gen_case1(4, 2).unwrap());
    assert_ne!(bits(&a.witness.unwrap().l), bits(&b.witness.unwrap().l));
}

#[test]
fn generator_arguments_validated() {
    assert!(matches!(gen_case1(0, 0), Err(Error::InvalidInput(_))));
    assert!(matches!(gen_case2(3, 2.0, 0), Err(Error::InvalidAlpha(_))));
    assert!(matches!(gen_case2(3, f64::NAN, 0), Err(Error::InvalidAlpha(_))));
    assert!(matches!(gen_case3(3, 2.0, 1.5, 0.5, 0), Err(Error::InvalidInput(_))));
    assert!(matches!(gen_case3(3, -1.0, 0.5, 0.5, 0), Err(Error::InvalidInput(_))));
}

#[test]
fn fixtures_are_well_formed() {
    let all = fixtures();
    assert!(all.len() >= 9);
    for p in &all {
        p.spec.validate().unwrap();
        assert!(p.witness.is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // A certificate from the singular-value search must satisfy the
    // three-inequality test at the same α.
    #[test]
    fn singular_value_search_implies_inequalities(g in (1usize..=6).prop_flat_map(|n| general(n, n)), c in 2.0f64..30.0) {
        let n = g.rows();
        let a = g.scale(0.2).try_add(&Matrix::identity(n)).unwrap().scale(c);
        if let Some(cert) = find_alpha_theorem4(&a).unwrap() {
            prop_assert!(cert.alpha > 2.0);
            prop_assert!(g1(cert.alpha) < cert.sigma_min && cert.sigma_max < g2(cert.alpha));
            let (holds, again) = check_theorem3(&a, cert.alpha).unwrap();
            prop_assert!(holds, "{:?}", again);
        }
    }
}
