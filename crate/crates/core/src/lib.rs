//! Dense solvers for nonlinear matrix equations with SPD solutions.
//!
//! The iterations couple a Newton–Schulz inverse approximation with a
//! positive definite total least squares (PDTLS) step, so the `X` iterates
//! stay SPD. Around the solvers sit fixed-point baselines, solvability
//! checkers, seeded problem generators and a small benchmark harness.

// `!(x > 0.0)` is used on purpose so NaN lands in the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod baselines;
pub mod bench;
pub mod error;
pub mod existence;
pub mod manifest;
pub mod matfile;
pub mod matkernel;
pub mod neqsolvers;
pub mod pdtls;
pub mod probgen;

pub use error::{Error, Result};
