//! Constacyclic codes over finite chain rings and finite principal ideal
//! rings, in exact arithmetic.
//!
//! The crate builds the quotient ring R[X]/<X^n - lambda> for a finite chain
//! ring R and a unit lambda, factors X^n - lambda through the residue field
//! and Hensel lifting, and exposes the resulting code structure: generator
//! and check polynomial towers, idempotents, cardinalities, a BCH bound, and
//! exact minimum-weight search. A companion `pir` module handles products of
//! chain rings and the principality boundary, backed by brute-force ideal
//! lattice oracles on small quotients.
//!
//! See the guide in `book/` for a narrative walk-through; the `constacyclic`
//! binary exposes the same operations on the command line.

pub mod arith;
pub mod code;
pub mod error;
pub mod factor;
pub mod field;
pub mod pir;
pub mod poly;
pub mod ring;

pub mod cli;

pub use error::{Error, Result};
pub use field::{extension_field, FieldElement, FieldEmbedding, FiniteFieldSpec};
pub use poly::{bezout_coprime, hensel_lift, Poly, QuotientCtx, QuotientElement};
pub use ring::{ChainRingSpec, Family, RingElement};
