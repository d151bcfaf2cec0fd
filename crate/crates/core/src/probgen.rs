//! Seeded random test problems with known SPD solutions, plus the fixed
//! example matrices used in the literature.
//!
//! All generators set `Q = I` and draw entries uniformly from `[0, 1)` with a
//! ChaCha8 stream seeded from the caller's `u64`, so output is bit-identical
//! across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::existence::{check_theorem3, find_alpha_theorem4, g1, g2, ExistenceCertificate, FactorWitness};
use crate::matkernel::{orthogonal_factor, spd_power, Matrix, SpdMatrix};
use crate::neqsolvers::EquationSpec;

#[derive(Clone, Debug)]
pub struct GeneratedProblem {
    pub name: String,
    pub spec: EquationSpec,
    /// Present for generated factor-based problems (cases 1 and 3).
    pub witness: Option<FactorWitness>,
    /// Present for generated case-2 problems.
    pub certificate: Option<ExistenceCertificate>,
    pub seed: u64,
    pub case_tag: u8,
}

fn uniform(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.gen::<f64>())
}

/// First `n` columns of the orthogonal factor of a uniform `(k·n)×(k·n)` matrix,
/// split into `k` stacked `n×n` blocks.
fn orthonormal_blocks(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Result<Vec<Matrix>> {
    let full = uniform(rng, k * n, k * n);
    let q = orthogonal_factor(&full.block(0, k * n, 0, n))?;
    Ok((0..k).map(|b| q.block(b * n, (b + 1) * n, 0, n)).collect())
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    Ok(())
}

/// `X + AᵀX⁻¹A = I` with `A = (LᵀL)^{1/2}N`, where `[L; N]` has orthonormal
/// columns. The solution is `X = LᵀL`.
pub fn gen_case1(n: usize, seed: u64) -> Result<GeneratedProblem> {
    check_dim(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = orthonormal_blocks(&mut rng, n, 2)?.into_iter();
    let (l, nf) = (blocks.next().unwrap(), blocks.next().unwrap());
    let gram = crate::matkernel::SymMatrix::symmetrize(&l.transpose_mul(&l)?)?;
    let a = spd_power(&gram, 0.5)?.matmul(&nf)?;
    let q = SpdMatrix::identity(n);
    Ok(GeneratedProblem {
        name: format!("case1-n{n}-seed{seed}"),
        spec: EquationSpec::Case1 { a, q: q.clone() },
        witness: Some(FactorWitness::new(l, vec![nf], q)?),
        certificate: None,
        seed,
        case_tag: 1,
    })
}

/// `X − AᵀX⁻²A = I` with `A = U·diag(d)·Vᵀ`, every `dᵢ` uniform in
/// `(α√(α−1), √(2α)(α−1))`.
pub fn gen_case2(n: usize, alpha: f64, seed: u64) -> Result<GeneratedProblem> {
    check_dim(n)?;
    if !(alpha > 2.0) || !alpha.is_finite() {
        return Err(Error::InvalidAlpha(alpha));
    }
    let (s1, s2) = (g1(alpha), g2(alpha));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d: Vec<f64> = (0..n).map(|_| (s2 - s1) * rng.gen::<f64>() + s1).collect();
    let u = orthogonal_factor(&uniform(&mut rng, n, n))?;
    let v = orthogonal_factor(&uniform(&mut rng, n, n))?;
    let a = u.matmul(&Matrix::from_diag(&d))?.matmul(&v.transpose())?;
    let certificate = match find_alpha_theorem4(&a)? {
        Some(c) => c,
        None => check_theorem3(&a, alpha)?.1,
    };
    Ok(GeneratedProblem {
        name: format!("case2-n{n}-seed{seed}"),
        spec: EquationSpec::Case2 {
            a,
            q: SpdMatrix::identity(n),
        },
        witness: None,
        certificate: Some(certificate),
        seed,
        case_tag: 2,
    })
}

/// `Xˢ + A₁ᵀX^{−t₁}A₁ + A₂ᵀX^{−t₂}A₂ = I` with `Aᵢ = (LᵀL)^{tᵢ/(2s)}Nᵢ`, where
/// `[L; N₁; N₂]` has orthonormal columns. The solution is `X = (LᵀL)^{1/s}`.
pub fn gen_case3(n: usize, s: f64, t1: f64, t2: f64, seed: u64) -> Result<GeneratedProblem> {
    check_dim(n)?;
    if !(s > 0.0 && s.is_finite()) || !(t1 > 0.0 && t1 <= 1.0) || !(t2 > 0.0 && t2 <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "need s > 0 and t1, t2 in (0, 1], got s={s}, t1={t1}, t2={t2}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = orthonormal_blocks(&mut rng, n, 3)?.into_iter();
    let l = blocks.next().unwrap();
    let n1 = blocks.next().unwrap();
    let n2 = blocks.next().unwrap();
    let gram = crate::matkernel::SymMatrix::symmetrize(&l.transpose_mul(&l)?)?;
    let a1 = spd_power(&gram, t1 / (2.0 * s))?.matmul(&n1)?;
    let a2 = spd_power(&gram, t2 / (2.0 * s))?.matmul(&n2)?;
    let q = SpdMatrix::identity(n);
    Ok(GeneratedProblem {
        name: format!("case3-n{n}-seed{seed}"),
        spec: EquationSpec::Case3 {
            a1,
            a2,
            q: q.clone(),
            s,
            t1,
            t2,
        },
        witness: Some(FactorWitness::new(l, vec![n1, n2], q)?),
        certificate: None,
        seed,
        case_tag: 3,
    })
}

const CASE1_EX1: [[f64; 4]; 4] = [
    [0.0955, 0.0797, 0.0848, 0.0575],
    [0.0920, 0.0114, 0.0583, 0.0010],
    [0.0385, 0.0159, 0.0586, 0.0809],
    [0.0163, 0.0356, 0.0926, 0.0609],
];

const CASE1_EX2: [[f64; 4]; 4] = [
    [0.8862, 0.8978, 0.8194, 0.4279],
    [0.9311, 0.5934, 0.5319, 0.9661],
    [0.1908, 0.5038, 0.2021, 0.6201],
    [0.2586, 0.6128, 0.4539, 0.6954],
];

const CASE1_EX4: [[f64; 6]; 6] = [
    [0.0450, 0.0440, 0.0900, 0.0660, 0.0470, 0.0060],
    [0.0810, 0.0680, 0.0550, 0.0700, 0.0460, 0.0140],
    [0.0930, 0.0470, 0.0750, 0.0920, 0.0810, 0.0170],
    [0.0670, 0.0950, 0.0120, 0.0660, 0.0820, 0.0630],
    [0.0370, 0.0350, 0.0450, 0.0690, 0.0190, 0.0030],
    [0.0410, 0.0340, 0.0070, 0.0850, 0.0030, 0.0470],
];

const CASE2_EX3: [[f64; 4]; 4] = [
    [-0.1, -0.1, 0.02, 0.08],
    [-0.09, 0.3, -0.2, -0.1],
    [-0.04, 0.1, 0.01, -0.1],
    [-0.08, -0.06, -0.1, -0.2],
];

const CASE3_EX1_A: [[f64; 6]; 6] = [
    [2.0, 0.0, 0.0, 1.0, 0.0, 0.0],
    [1.0, 2.0, 0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 3.0, 0.0, 1.0, 0.0],
    [1.0, 0.0, 0.0, 2.0, 0.0, 1.0],
    [1.0, 0.0, 1.0, 0.0, 3.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 1.0, 2.0],
];

const CASE3_EX1_B: [[f64; 6]; 6] = [
    [2.0, 1.0, 6.0, 0.0, 5.0, 7.0],
    [3.0, 4.0, 7.0, 1.0, 3.0, 0.0],
    [0.0, 9.0, 2.0, 4.0, 7.0, 8.0],
    [8.0, 5.0, 3.0, 0.0, 0.0, 1.0],
    [2.0, 5.0, 0.0, 2.0, 1.0, 7.0],
    [4.0, 0.0, 0.0, 1.0, 4.0, 9.0],
];

const CASE3_EX1_Q: [[f64; 6]; 6] = [
    [105.0, 66.0, 58.0, 15.0, 41.0, 73.0],
    [66.0, 154.0, 67.0, 50.0, 88.0, 121.0],
    [58.0, 67.0, 109.0, 15.0, 71.0, 61.0],
    [15.0, 50.0, 15.0, 28.0, 37.0, 57.0],
    [41.0, 88.0, 71.0, 37.0, 113.0, 136.0],
    [73.0, 121.0, 61.0, 57.0, 136.0, 250.0],
];

fn mat<R: AsRef<[f64]>>(rows: &[R]) -> Matrix {
    Matrix::from_rows(rows).expect("fixture literal")
}

fn fixture(name: &str, case_tag: u8, spec: EquationSpec) -> GeneratedProblem {
    GeneratedProblem {
        name: name.to_string(),
        spec,
        witness: None,
        certificate: None,
        seed: 0,
        case_tag,
    }
}

/// The published example problems, by name (`case1-ex1`, …, `case3-ex2`).
pub fn fixtures() -> Vec<GeneratedProblem> {
    let i4 = SpdMatrix::identity(4);
    let i6 = SpdMatrix::identity(6);
    let case1 = |name, a: Matrix, q: &SpdMatrix| {
        fixture(name, 1, EquationSpec::Case1 { a, q: q.clone() })
    };
    let case2 = |name, a: Matrix, q: &SpdMatrix| {
        fixture(name, 2, EquationSpec::Case2 { a, q: q.clone() })
    };
    vec![
        case1("case1-ex1", mat(&CASE1_EX1), &i4),
        case1("case1-ex2", mat(&CASE1_EX2), &i4),
        case1("case1-ex4", mat(&CASE1_EX4), &i6),
        case2("case2-ex1", mat(&CASE1_EX1), &i4),
        case2("case2-ex2", mat(&CASE1_EX2), &i4),
        case2("case2-ex3", mat(&CASE2_EX3), &i4),
        case2("case2-ex4", mat(&CASE1_EX4), &i6),
        fixture(
            "case3-ex1",
            3,
            EquationSpec::Case3 {
                a1: mat(&CASE3_EX1_A),
                a2: mat(&CASE3_EX1_B),
                q: SpdMatrix::from_matrix(mat(&CASE3_EX1_Q)).expect("SPD fixture"),
                s: 5.0,
                t1: 0.2,
                t2: 0.5,
            },
        ),
        fixture(
            "case3-ex2",
            3,
            EquationSpec::Case3 {
                a1: Matrix::from_diag(&[0.5853, 0.5497]),
                a2: Matrix::from_diag(&[0.9172, 0.2858]),
                q: SpdMatrix::from_matrix(Matrix::from_diag(&[0.3786, 0.3769]))
                    .expect("SPD fixture"),
                s: 2.0,
                t1: 0.5,
                t2: 0.5,
            },
        ),
    ]
}

/// Looks up one of [`fixtures`] by name.
pub fn fixture_by_name(name: &str) -> Option<GeneratedProblem> {
    fixtures().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::existence::{check_theorem1, check_theorem2};

    #[test]
    fn scalar_case1_is_orthonormal_pair() {
        let p = gen_case1(1, 5).unwrap();
        let w = p.witness.unwrap();
        let (l, n) = (w.l.get(0, 0), w.n_list[0].get(0, 0));
        assert!((l * l + n * n - 1.0).abs() < 1e-15);
        let EquationSpec::Case1 { a, .. } = p.spec else { panic!() };
        assert!((a.get(0, 0) - l.abs() * n).abs() < 1e-15);
    }

    #[test]
    fn generators_pass_their_checkers() {
        let p = gen_case1(4, 42).unwrap();
        assert!(p.witness.as_ref().unwrap().off_diagonal_ratio().unwrap() <= 1e-12);
        assert!(check_theorem2(p.witness.as_ref().unwrap()).unwrap());

        let p = gen_case3(5, 2.0, 0.5, 0.5, 11).unwrap();
        assert!(check_theorem1(p.witness.as_ref().unwrap(), 2.0, 0.5, 0.5).unwrap());

        let p = gen_case2(10, 3.0, 7).unwrap();
        let EquationSpec::Case2 { a, .. } = &p.spec else { panic!() };
        let sv = crate::matkernel::singular_values(a).unwrap();
        assert!(sv.iter().all(|&v| v > g1(3.0) && v < g2(3.0)));
        assert!(find_alpha_theorem4(a).unwrap().is_some());
    }

    #[test]
    fn case2_rejects_small_alpha() {
        assert!(matches!(gen_case2(3, 2.0, 1), Err(Error::InvalidAlpha(_))));
    }

    #[test]
    fn deterministic() {
        let a = gen_case3(4, 3.0, 0.3, 0.9, 99).unwrap();
        let b = gen_case3(4, 3.0, 0.3, 0.9, 99).unwrap();
        let (EquationSpec::Case3 { a1: x, a2: y, .. }, EquationSpec::Case3 { a1: u, a2: v, .. }) =
            (&a.spec, &b.spec)
        else {
            panic!()
        };
        assert_eq!(x.as_slice(), u.as_slice());
        assert_eq!(y.as_slice(), v.as_slice());
    }

    #[test]
    fn fixture_entries() {
        let p = fixture_by_name("case1-ex1").unwrap();
        let EquationSpec::Case1 { a, .. } = &p.spec else { panic!() };
        assert_eq!(a.get(0, 0), 0.0955);
        assert_eq!(a.get(3, 3), 0.0609);

        let p = fixture_by_name("case3-ex1").unwrap();
        let EquationSpec::Case3 { q, s, t1, t2, .. } = &p.spec else { panic!() };
        assert_eq!(q.get(0, 0), 105.0);
        assert_eq!((*s, *t1, *t2), (5.0, 0.2, 0.5));

        let p = fixture_by_name("case2-ex3").unwrap();
        let EquationSpec::Case2 { a, .. } = &p.spec else { panic!() };
        assert_eq!(a.get(0, 0), -0.1);
        assert_eq!(a.get(1, 1), 0.3);
        assert_eq!(fixtures().len(), 9);
    }
}
