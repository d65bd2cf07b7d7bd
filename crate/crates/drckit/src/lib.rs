//! Exact computation with finite two-sided projection algebras,
//! DRC-restriction semigroups, and their chain projection ordered categories.
//!
//! The crate is organized around the objects it computes with:
//!
//! - [`algebra`] holds projection algebras as operation tables: axiom
//!   classification, the natural order, the `θ`/`δ` maps, downsets,
//!   homomorphisms, and exhaustive enumeration of small strong algebras.
//! - [`semigroup`] holds bi-unary semigroups as Cayley plus unary tables:
//!   DRC and DRC-ample checks, the projection algebra of a semigroup, the
//!   natural order, the maximum projection-separating congruence `μ`,
//!   quotients, and special-class detection.
//! - [`paths`] is the path category over a strong projection algebra, with
//!   composition, left/right restriction, the path order, and the
//!   `Θ`/`Δ` composites.
//! - [`chain`] is the chain semigroup: admissible triples, rewrite moves,
//!   bounded equivalence search, word normalization, the fundamental model
//!   built from signatures, and homomorphism extension.
//! - [`munn`] is the Munn-style model: partial isomorphisms between
//!   downsets, their groupoid and semigroup products, the representation
//!   `a ↦ ν_a`, and the pair representation.
//! - [`category`] holds finite chain projection ordered categories as
//!   explicit data, with axiom checkers and the round-trip constructions to
//!   and from DRC-restriction semigroups.
//! - [`docs`] defines plain-text file formats for all of the above.
//! - [`cli`] is the `drckit` command-line front end.
//!
//! Run `cargo run --example fundamental_three_ways` (or any other example)
//! for a tour; each example exercises one capability end to end.

// index loops over operation tables read better than iterator chains here
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod category;
pub mod chain;
pub mod cli;
pub mod docs;
pub mod error;
pub mod munn;
pub mod paths;
pub mod semigroup;

pub use error::{Error, Result};
