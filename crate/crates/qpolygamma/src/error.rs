//! Error types shared across the crate.

use crate::qcore::Branch;
use std::fmt;

/// Everything that can go wrong while evaluating or verifying.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The deformation parameter must be a finite positive real.
    NonPositiveQ(f64),
    /// Argument outside the supported domain (x <= 0, invalid grid, ...).
    Domain(String),
    /// Derivative order above the supported cap.
    OrderTooLarge(u32),
    /// The truncation tail could not be driven below tolerance within
    /// the term budget. Carries the best bound reached.
    ToleranceNotMet {
        terms: usize,
        err_bound: f64,
        target: f64,
    },
    /// Operation invoked with a q-branch it is not defined on.
    BranchMismatch { expected: &'static str, got: Branch },
    /// Operation not defined at q = 1; use the classical routines.
    ClassicalBranch,
    /// Logarithm argument became nonpositive after rounding.
    LogDomain,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveQ(q) => write!(f, "q must be a finite positive real, got {q}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::OrderTooLarge(m) => write!(f, "derivative order {m} exceeds the cap of 6"),
            Error::ToleranceNotMet {
                terms,
                err_bound,
                target,
            } => write!(
                f,
                "tolerance not met after {terms} terms (tail bound {err_bound:e}, target {target:e})"
            ),
            Error::BranchMismatch { expected, got } => {
                write!(f, "branch mismatch: requires {expected}, got {got:?}")
            }
            Error::ClassicalBranch => {
                write!(f, "not defined at q = 1; use the classical combination instead")
            }
            Error::LogDomain => write!(f, "log argument nonpositive after rounding"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
