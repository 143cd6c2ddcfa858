//! Ideal theory of finite commutative rings: table rings, ideal predicates,
//! constructions, a symbolic backend for a few infinite families, and a
//! theorem-checking harness.

pub mod classify;
pub mod construct;
pub mod elemset;
pub mod error;
pub mod finring;
pub mod harness;
pub mod zsym;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use finring::{Elem, ElementSubset, IdealSet, Ring, RingTable};

/// Symbolic types over machine integers.
pub type SymElemI64 = zsym::SymElem<i64>;
pub type SymIdealI64 = zsym::SymIdeal<i64>;
pub type BoundedVerdictI64 = zsym::BoundedVerdict<i64>;
