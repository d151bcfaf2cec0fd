use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("DᵀD is not positive definite (D is rank deficient)")]
    RankDeficient,

    #[error("TᵀT is singular at machine scale; no SPD solution exists")]
    SingularTarget,

    #[error("numerical breakdown at iteration {iteration}: {source}")]
    Breakdown {
        iteration: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("iterate X left the SPD cone at iteration {iteration}")]
    IterateNotPositiveDefinite { iteration: usize },

    #[error("alpha must be greater than 2, got {0}")]
    InvalidAlpha(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown solver id `{0}`")]
    UnknownSolverId(String),

    #[error("solver `{solver}` does not apply to case {case}")]
    IncompatibleSolver { solver: String, case: String },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("failed to parse {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures caused by the numerics rather than by the caller's input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotPositiveDefinite(_)
                | Error::NoConvergence { .. }
                | Error::RankDeficient
                | Error::SingularTarget
                | Error::Breakdown { .. }
                | Error::IterateNotPositiveDefinite { .. }
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn breakdown(iteration: usize, source: Error) -> Self {
        Error::Breakdown {
            iteration,
            source: Box::new(source),
        }
    }
}
