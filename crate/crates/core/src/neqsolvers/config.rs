use crate::error::{Error, Result};
use crate::matkernel::{SpdMatrix, SymMatrix};

/// Starting point of the coupled `(X, Y)` iteration.
#[derive(Clone, Debug, Default)]
pub enum Init {
    Identity,
    /// `X₀ = Q`, `Y₀ = Q⁻¹`; for the power-sum cases `Y₀ = ((γ+1)/(2γ))·Q^{−1/s}`.
    #[default]
    QBased,
    Custom { x0: SpdMatrix, y0: SpdMatrix },
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Absolute part of the stopping rule `E ≤ δ + ε·scale`.
    pub delta: f64,
    /// Relative part of the stopping rule.
    pub eps: f64,
    pub max_iter: usize,
    pub init: Init,
    /// γ in the power-sum start `Y₀ = ((γ+1)/(2γ))·Q^{−1/s}`.
    pub gamma: f64,
    /// Record `λ_min(X_k)` for every iterate (one extra eigendecomposition per step).
    pub track_min_eigenvalue: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            delta: 1e-10,
            eps: 1e-12,
            max_iter: 500,
            init: Init::QBased,
            gamma: 1.0,
            track_min_eigenvalue: false,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.delta >= 0.0 && self.delta.is_finite()) || !(self.eps >= 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "delta and eps must be finite and nonnegative, got {} and {}",
                self.delta, self.eps
            )));
        }
        if self.delta == 0.0 && self.eps == 0.0 {
            return Err(Error::InvalidInput("delta and eps cannot both be zero".into()));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidInput("max_iter must be positive".into()));
        }
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidInput(format!("gamma must be positive, got {}", self.gamma)));
        }
        Ok(())
    }
}

/// `E ≤ δ + ε·scale`.
pub fn stop_check(e: f64, scale: f64, cfg: &SolverConfig) -> bool {
    e <= cfg.delta + cfg.eps * scale
}

pub(crate) fn check_custom_dims(x0: &SymMatrix, y0: &SymMatrix, n: usize) -> Result<()> {
    if x0.dim() != n || y0.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "custom start is {}x{} / {}x{} for an {n}x{n} problem",
            x0.dim(),
            x0.dim(),
            y0.dim(),
            y0.dim()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stop_rule_examples() {
        let cfg = SolverConfig::default();
        assert!(stop_check(1e-12, 1.0, &cfg));
        assert!(!stop_check(1e-9, 1.0, &cfg));
        assert!(stop_check(1.0e-10 + 0.5e-12, 1.0, &cfg));
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let both_zero = SolverConfig {
            delta: 0.0,
            eps: 0.0,
            ..Default::default()
        };
        assert!(both_zero.validate().is_err());
        let negative = SolverConfig {
            delta: -1.0,
            ..Default::default()
        };
        assert!(negative.validate().is_err());
        let no_iters = SolverConfig {
            max_iter: 0,
            ..Default::default()
        };
        assert!(no_iters.validate().is_err());
    }
}
