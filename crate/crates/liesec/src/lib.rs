//! Exact-arithmetic structure theory for finite-dimensional Lie algebras.
//!
//! The crate computes, over ℚ and GF(p) with no floating point anywhere:
//!
//! - canonical subspaces, kernels, and exhaustive subspace enumeration
//!   ([`subspace`]);
//! - structure-constant Lie algebras with their closures, series, radical,
//!   Killing form, quotients, minimal ideals, chief series, and isomorphism
//!   fingerprints ([`algebra`], [`invariants`], [`quotients`], [`ideals`],
//!   [`iso`]);
//! - maximal-subalgebra enumeration and certification, a named catalog, and
//!   a deterministic corpus generator ([`maximal`], [`catalog`], [`corpus`]);
//! - cores, c-ideals, c-sections, c-index, ideal index, primitivity types,
//!   and a claim-by-claim verification suite ([`section`], [`verify`]);
//! - a JSON algebra format, report schema, and CLI ([`format`], [`report`],
//!   [`cli`]).
//!
//! Start with the runnable examples in `examples/` — one per capability —
//! or the `liesec` binary (`liesec --help`).

pub mod algebra;
pub mod catalog;
pub mod cert;
pub mod corpus;
pub mod cli;
pub mod error;
pub mod format;
pub mod ideals;
pub mod invariants;
pub mod iso;
pub mod matrix;
pub mod maximal;
pub mod quotients;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod section;
pub mod subspace;
pub mod verify;

pub use algebra::{JacobiViolation, LieAlgebra};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::Subspace;
