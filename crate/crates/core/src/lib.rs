//! Idempotent completions of an extriangulated category of quiver representations.
//!
//! The base category is a dimension-constrained, extension-closed subcategory of
//! representations of an acyclic quiver over a prime field (or a formal
//! additive closure with split exact structure). On top of it the crate builds
//! the idempotent completion, its extension bifunctor and realization, the weak
//! idempotent completion, and a randomized checker for the extriangulated axioms.

pub mod error;
pub mod axiomlab;
pub mod basecat;
pub mod exactlin;
pub mod karoubi;
pub mod quiverrep;
pub mod weakcomp;

pub use error::{Error, Result};
