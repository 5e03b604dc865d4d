//! Finite-semiring computational algebra.
//!
//! Everything here works on explicit operation tables over a carrier
//! `{0, …, n−1}`: validation against the semiring axioms, Green's relations
//! on either reduct, congruence generation and enumeration, variety
//! membership by exhaustive identity checking, quotient / direct / spined
//! product constructions, and an isomorphism-free enumerator for small
//! orders. The `theorem` module ties these together into machine checks for
//! the decomposition results the crate is built around.
//!
//! The scale is deliberately small (orders up to 8 for most operations,
//! enumeration up to 4–5), which keeps every check exact: identities are
//! decided by exhausting all assignments, congruence lattices by closing all
//! principal congruences, isomorphisms by pruned backtracking.

pub mod classify;
pub mod congruence;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod green;
pub mod io;
pub mod relation;
pub mod semiring;
pub mod structure;
pub mod term;
pub mod theorem;
pub mod variety;

pub use error::{AxiomViolation, Error};
pub use semiring::{Element, FiniteSemiring, OpTable, SubsetView};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
