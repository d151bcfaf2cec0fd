use crate::error::{Error, Result};
use crate::matkernel::{Matrix, SpdMatrix};

/// One instance of `X^s + Σ Aᵢᵀ fᵢ(X) Aᵢ = Q`.
#[derive(Clone, Debug)]
pub enum EquationSpec {
    /// `X + AᵀX⁻¹A = Q`
    Case1 { a: Matrix, q: SpdMatrix },
    /// `X − AᵀX⁻²A = Q`
    Case2 { a: Matrix, q: SpdMatrix },
    /// `Xˢ + A1ᵀX^{−t1}A1 + A2ᵀX^{−t2}A2 = Q`
    Case3 {
        a1: Matrix,
        a2: Matrix,
        q: SpdMatrix,
        s: f64,
        t1: f64,
        t2: f64,
    },
    /// `Xˢ + Σᵢ AᵢᵀX^{−tᵢ}Aᵢ = Q`
    General {
        a_list: Vec<Matrix>,
        t_list: Vec<f64>,
        s: f64,
        q: SpdMatrix,
    },
}

impl EquationSpec {
    pub fn q(&self) -> &SpdMatrix {
        match self {
            EquationSpec::Case1 { q, .. }
            | EquationSpec::Case2 { q, .. }
            | EquationSpec::Case3 { q, .. }
            | EquationSpec::General { q, .. } => q,
        }
    }

    pub fn dim(&self) -> usize {
        self.q().dim()
    }

    /// Exponent on the leading `X` term (1 for cases 1 and 2).
    pub fn s(&self) -> f64 {
        match self {
            EquationSpec::Case1 { .. } | EquationSpec::Case2 { .. } => 1.0,
            EquationSpec::Case3 { s, .. } | EquationSpec::General { s, .. } => *s,
        }
    }

    /// "1", "2", "3" or "general".
    pub fn case_label(&self) -> &'static str {
        match self {
            EquationSpec::Case1 { .. } => "1",
            EquationSpec::Case2 { .. } => "2",
            EquationSpec::Case3 { .. } => "3",
            EquationSpec::General { .. } => "general",
        }
    }

    /// Coefficients and exponents of the power-sum form; `None` for cases 1 and 2.
    pub(crate) fn power_terms(&self) -> Option<(Vec<&Matrix>, Vec<f64>)> {
        match self {
            EquationSpec::Case3 { a1, a2, t1, t2, .. } => Some((vec![a1, a2], vec![*t1, *t2])),
            EquationSpec::General { a_list, t_list, .. } => {
                Some((a_list.iter().collect(), t_list.clone()))
            }
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let check = |name: &str, a: &Matrix| -> Result<()> {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{} but Q is {n}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
            if !a.is_finite() {
                return Err(Error::InvalidInput(format!("{name} has non-finite entries")));
            }
            Ok(())
        };
        match self {
            EquationSpec::Case1 { a, .. } | EquationSpec::Case2 { a, .. } => check("A", a),
            EquationSpec::Case3 {
                a1, a2, s, t1, t2, ..
            } => {
                check("A1", a1)?;
                check("A2", a2)?;
                validate_s(*s)?;
                validate_t(*t1)?;
                validate_t(*t2)
            }
            EquationSpec::General {
                a_list, t_list, s, ..
            } => {
                if a_list.is_empty() || a_list.len() != t_list.len() {
                    return Err(Error::InvalidInput(format!(
                        "need m ≥ 1 matching coefficients and exponents, got {} and {}",
                        a_list.len(),
                        t_list.len()
                    )));
                }
                for (i, a) in a_list.iter().enumerate() {
                    check(&format!("A{}", i + 1), a)?;
                }
                validate_s(*s)?;
                t_list.iter().try_for_each(|&t| validate_t(t))
            }
        }
    }
}

fn validate_s(s: f64) -> Result<()> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::InvalidInput(format!("s must be positive, got {s}")));
    }
    Ok(())
}

fn validate_t(t: f64) -> Result<()> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::InvalidInput(format!("exponent t must lie in (0, 1], got {t}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let q = SpdMatrix::identity(2);
        let ok = EquationSpec::Case3 {
            a1: Matrix::zeros(2, 2),
            a2: Matrix::zeros(2, 2),
            q: q.clone(),
            s: 2.0,
            t1: 1.0,
            t2: 0.5,
        };
        assert!(ok.validate().is_ok());
        let bad_t = EquationSpec::General {
            a_list: vec![Matrix::zeros(2, 2)],
            t_list: vec![0.0],
            s: 1.0,
            q: q.clone(),
        };
        assert!(bad_t.validate().is_err());
        let mismatched = EquationSpec::General {
            a_list: vec![Matrix::zeros(2, 2)],
            t_list: vec![],
            s: 1.0,
            q: q.clone(),
        };
        assert!(mismatched.validate().is_err());
        let bad_dim = EquationSpec::Case1 {
            a: Matrix::zeros(3, 3),
            q,
        };
        assert!(matches!(bad_dim.validate(), Err(Error::DimensionMismatch(_))));
    }
}
