//! Error types shared across the crate.
//!
//! Programmer errors (dimension/field mismatches between values that the call
//! site constructed itself) panic, mirroring the convention of dense
//! linear-algebra crates. `Error` is reserved for conditions a caller cannot
//! rule out statically: capability limits (infinite-field enumeration,
//! exceeded budgets, unconfirmed certifications over ℚ), invalid input data,
//! and anomalies — results that would contradict cited background theory and
//! therefore indicate an implementation bug rather than a property of the
//! input.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that must enumerate field elements or subspaces was
    /// invoked over ℚ.
    #[error("operation `{op}` requires a finite field")]
    InfiniteField { op: &'static str },

    /// An enumeration would exceed the configured budget.
    #[error("enumeration needs {needed} items, exceeding the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    /// A subspace argument that must be a subalgebra is not one.
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    /// A subspace argument that must be an ideal is not one.
    #[error("subspace is not an ideal")]
    NotAnIdeal,

    /// A subalgebra argument that must be maximal is not, or could not be
    /// certified maximal.
    #[error("subalgebra is not certified maximal: {reason}")]
    NotMaximal { reason: String },

    /// An operation over ℚ depends on a certification step that could not be
    /// completed (e.g. minimality of a candidate ideal). The step is named so
    /// callers can report it.
    #[error("unconfirmed step over the rationals: {step}")]
    Unconfirmed { step: String },

    /// A computed result contradicts cited background theory. Always loud:
    /// this is the highest-value bug signal the library can produce.
    #[error("anomaly (would contradict cited theory): {detail}")]
    Anomaly { detail: String },

    /// Invalid user-supplied data (malformed file, bad parameter).
    #[error("invalid input: {detail}")]
    InvalidInput { detail: String },

    /// Verification failure surfaced as an error by a cross-checking
    /// operation (e.g. the ideal-index identity guard).
    #[error("verification failure: {detail}")]
    VerificationFailure { detail: String },

    /// I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for CLI surfaces: 1 for verification failures
    /// (including anomalies, which are failed internal cross-checks),
    /// 2 for usage/capability errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Anomaly { .. } | Error::VerificationFailure { .. } => 1,
            _ => 2,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
