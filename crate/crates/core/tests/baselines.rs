use spdsolve::baselines::{fixed_point, fixed_point_case1, fixed_point_general};
use spdsolve::matkernel::{Matrix, SpdMatrix};
use spdsolve::neqsolvers::{solve, solve_case1, SolverConfig};
use spdsolve::probgen::{fixture_by_name, gen_case3};
use spdsolve::Error;

fn agree(name: &str, tol: f64) {
    let p = fixture_by_name(name).unwrap();
    let cfg = SolverConfig::default();
    let nl = solve(&p.spec, &cfg).unwrap();
    let fp = fixed_point(&p.spec, &cfg).unwrap();
    assert!(nl.converged && fp.converged, "{name}");
    let gap = nl.x.try_sub(&fp.x).unwrap().fro_norm();
    assert!(gap <= tol * nl.x.fro_norm(), "{name}: {gap}");
}

#[test]
fn agrees_with_nonlinear_solver_case1() {
    agree("case1-ex1", 1e-6);
}

#[test]
fn agrees_with_nonlinear_solver_case2() {
    agree("case2-ex3", 1e-5);
}

#[test]
fn agrees_with_nonlinear_solver_case3() {
    agree("case3-ex1", 1e-6);
}

#[test]
fn agrees_on_random_case3() {
    let mut compared = 0;
    for seed in 0..10 {
        let p = gen_case3(5, 2.0, 0.5, 0.5, seed).unwrap();
        let cfg = SolverConfig::default();
        let (Ok(nl), Ok(fp)) = (solve(&p.spec, &cfg), fixed_point(&p.spec, &cfg)) else {
            continue;
        };
        if nl.converged && fp.converged {
            let gap = nl.x.try_sub(&fp.x).unwrap().fro_norm();
            assert!(gap <= 1e-6 * nl.x.fro_norm(), "seed {seed}: {gap}");
            compared += 1;
        }
    }
    assert!(compared > 0);
}

#[test]
fn scalar_case1_reaches_larger_root() {
    let a = Matrix::from_diag(&[0.6]);
    let q = SpdMatrix::from_matrix(Matrix::from_diag(&[2.0])).unwrap();
    let cfg = SolverConfig::default();
    let fp = fixed_point_case1(&a, &q, &cfg).unwrap();
    let nl = solve_case1(&a, &q, &cfg).unwrap();
    assert!((fp.x.get(0, 0) - 1.8).abs() < 1e-9);
    assert!((fp.x.get(0, 0) - nl.x.get(0, 0)).abs() < 1e-9);
}

#[test]
fn leaving_the_cone_is_reported() {
    let a = Matrix::from_diag(&[2.0]);
    let q = SpdMatrix::from_matrix(Matrix::from_diag(&[1.0])).unwrap();
    let r = fixed_point_case1(&a, &q, &SolverConfig::default());
    assert!(matches!(r, Err(Error::IterateNotPositiveDefinite { iteration: 1 })), "{r:?}");
}

#[test]
fn general_baseline_matches_case1_baseline() {
    let p = fixture_by_name("case1-ex1").unwrap();
    let spdsolve::neqsolvers::EquationSpec::Case1 { a, q } = &p.spec else { panic!() };
    let cfg = SolverConfig::default();
    let x = fixed_point_case1(a, q, &cfg).unwrap();
    let y = fixed_point_general(std::slice::from_ref(a), &[1.0], 1.0, q, &cfg).unwrap();
    assert!(x.x.try_sub(&y.x).unwrap().fro_norm() <= 1e-12);
}
