//! A problem on disk: one matrix file per operand plus `manifest.json`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::existence::{ExistenceCertificate, FactorWitness};
use crate::matfile::{read_matrix, write_matrix};
use crate::matkernel::{Matrix, SpdMatrix};
use crate::neqsolvers::EquationSpec;
use crate::probgen::GeneratedProblem;

pub const MANIFEST_NAME: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub name: String,
    /// `"1"`, `"2"`, `"3"` or `"general"`.
    pub case: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t2: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub t: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ExistenceCertificate>,
    /// Operand name (`A`, `Q`, `A1`, `L`, `N1`, …) to file name, relative to the manifest.
    pub files: BTreeMap<String, String>,
}

fn put(dir: &Path, files: &mut BTreeMap<String, String>, key: &str, m: &Matrix) -> Result<()> {
    let file = format!("{key}.mat");
    write_matrix(&dir.join(&file), m, Some(key))?;
    files.insert(key.to_string(), file);
    Ok(())
}

/// Writes `problem` into `dir` (created if missing) and returns the manifest path.
pub fn write_problem(dir: &Path, problem: &GeneratedProblem) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let spec = &problem.spec;
    let mut files = BTreeMap::new();
    let (mut s, mut t1, mut t2, mut t) = (None, None, None, Vec::new());
    match spec {
        EquationSpec::Case1 { a, .. } | EquationSpec::Case2 { a, .. } => {
            put(dir, &mut files, "A", a)?;
        }
        EquationSpec::Case3 {
            a1,
            a2,
            s: ss,
            t1: tt1,
            t2: tt2,
            ..
        } => {
            put(dir, &mut files, "A1", a1)?;
            put(dir, &mut files, "A2", a2)?;
            (s, t1, t2) = (Some(*ss), Some(*tt1), Some(*tt2));
        }
        EquationSpec::General {
            a_list,
            t_list,
            s: ss,
            ..
        } => {
            for (i, a) in a_list.iter().enumerate() {
                put(dir, &mut files, &format!("A{}", i + 1), a)?;
            }
            s = Some(*ss);
            t = t_list.clone();
        }
    }
    put(dir, &mut files, "Q", spec.q())?;
    if let Some(w) = &problem.witness {
        put(dir, &mut files, "L", &w.l)?;
        if w.n_list.len() == 1 {
            put(dir, &mut files, "N", &w.n_list[0])?;
        } else {
            for (i, n) in w.n_list.iter().enumerate() {
                put(dir, &mut files, &format!("N{}", i + 1), n)?;
            }
        }
    }
    let manifest = Manifest {
        name: problem.name.clone(),
        case: spec.case_label().to_string(),
        n: spec.dim(),
        seed: Some(problem.seed),
        s,
        t1,
        t2,
        t,
        certificate: problem.certificate,
        files,
    };
    let path = dir.join(MANIFEST_NAME);
    let text = serde_json::to_string_pretty(&manifest)?;
    fs::write(&path, text + "\n").map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// Reads a problem from a manifest file or from a directory containing one.
pub fn read_problem(path: &Path) -> Result<GeneratedProblem> {
    let manifest_path = if path.is_dir() {
        path.join(MANIFEST_NAME)
    } else {
        path.to_path_buf()
    };
    let dir = manifest_path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let text = fs::read_to_string(&manifest_path).map_err(|e| Error::io(&manifest_path, e))?;
    let m: Manifest = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: manifest_path.clone(),
        message: e.to_string(),
    })?;

    let load = |key: &str| -> Result<Option<Matrix>> {
        m.files
            .get(key)
            .map(|f| read_matrix(&dir.join(f)))
            .transpose()
    };
    let need = |key: &str| -> Result<Matrix> {
        load(key)?.ok_or_else(|| Error::Parse {
            path: manifest_path.clone(),
            message: format!("manifest lists no `{key}` file"),
        })
    };
    let param = |v: Option<f64>, name: &str| -> Result<f64> {
        v.ok_or_else(|| Error::Parse {
            path: manifest_path.clone(),
            message: format!("manifest is missing `{name}`"),
        })
    };

    let q = SpdMatrix::from_matrix(need("Q")?)?;
    let (spec, case_tag) = match m.case.as_str() {
        "1" => (EquationSpec::Case1 { a: need("A")?, q: q.clone() }, 1),
        "2" => (EquationSpec::Case2 { a: need("A")?, q: q.clone() }, 2),
        "3" => (
            EquationSpec::Case3 {
                a1: need("A1")?,
                a2: need("A2")?,
                q: q.clone(),
                s: param(m.s, "s")?,
                t1: param(m.t1, "t1")?,
                t2: param(m.t2, "t2")?,
            },
            3,
        ),
        "general" => {
            let a_list = (1..=m.t.len())
                .map(|i| need(&format!("A{i}")))
                .collect::<Result<Vec<_>>>()?;
            (
                EquationSpec::General {
                    a_list,
                    t_list: m.t.clone(),
                    s: param(m.s, "s")?,
                    q: q.clone(),
                },
                0,
            )
        }
        other => {
            return Err(Error::Parse {
                path: manifest_path,
                message: format!("unknown case `{other}`"),
            })
        }
    };
    spec.validate()?;

    let witness = match load("L")? {
        Some(l) => {
            let n_list = match load("N")? {
                Some(n) => vec![n],
                None => [load("N1")?, load("N2")?].into_iter().flatten().collect(),
            };
            Some(FactorWitness::new(l, n_list, q)?)
        }
        None => None,
    };
    Ok(GeneratedProblem {
        name: m.name,
        spec,
        witness,
        certificate: m.certificate,
        seed: m.seed.unwrap_or(0),
        case_tag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probgen::{gen_case2, gen_case3};

    #[test]
    fn round_trip_case3_with_witness() {
        let dir = tempfile::tempdir().unwrap();
        let p = gen_case3(3, 2.0, 0.5, 0.25, 4).unwrap();
        let path = write_problem(dir.path(), &p).unwrap();
        let back = read_problem(&path).unwrap();
        let (EquationSpec::Case3 { a1, a2, s, t1, t2, .. }, EquationSpec::Case3 { a1: b1, a2: b2, s: bs, t1: bt1, t2: bt2, .. }) =
            (&p.spec, &back.spec)
        else {
            panic!()
        };
        assert_eq!(a1.as_slice(), b1.as_slice());
        assert_eq!(a2.as_slice(), b2.as_slice());
        assert_eq!((s, t1, t2), (bs, bt1, bt2));
        assert_eq!(back.witness.unwrap().n_list.len(), 2);
        assert_eq!(back.seed, 4);
    }

    #[test]
    fn round_trip_case2_certificate_from_dir() {
        let dir = tempfile::tempdir().unwrap();
        let p = gen_case2(4, 3.0, 9).unwrap();
        write_problem(dir.path(), &p).unwrap();
        let back = read_problem(dir.path()).unwrap();
        assert_eq!(back.certificate, p.certificate);
        assert!(dir.path().join("A.mat").exists());
    }

    #[test]
    fn missing_operand_is_parse_error() {
        let dir = tempfile::tempdir().unwrap();
        let p = gen_case2(2, 3.0, 1).unwrap();
        write_problem(dir.path(), &p).unwrap();
        fs::remove_file(dir.path().join("A.mat")).unwrap();
        assert!(read_problem(dir.path()).is_err());
    }
}
