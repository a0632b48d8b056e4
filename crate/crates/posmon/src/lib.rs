//! Structural data of the monoid of natural-valued monotone functions on a
//! finite poset, applied to multiplicity functions on matroids.
//!
//! The library computes, for any poset of at most 64 elements:
//!
//! - the irreducible upper sets, which index the minimal generators of the
//!   monoid of monotone functions ([`poset`]);
//! - the unique near-chain canonical form of every monotone function, the
//!   rewriting system reaching it, the induced monoid presentation and the
//!   Groebner basis of the defining ideal ([`monoid`]);
//! - the cone of rational monotone functions with its extremal rays and
//!   facets, the Gorenstein test via level functions, the Cohen-Macaulay type
//!   via minimal interior lattice points, and the prime elements
//!   ([`structure`]);
//! - matroid rank tables, multiplicity-function axioms, the divisibility
//!   digraph on subsets and the poset it induces, plus prime-wise slicing of
//!   multiplicities ([`matroid`]);
//! - fast exact counts of irreducible upper sets over those induced posets,
//!   including the Dedekind-number column ([`counting`]).
//!
//! Each major capability has a runnable example under `examples/`; the
//! `posmon` binary exposes the same operations as subcommands.

pub mod cache;
pub mod cli;
pub mod counting;
pub mod error;
pub mod json;
pub mod matroid;
pub mod monoid;
pub mod poset;
pub mod structure;

pub use error::{CountError, ExprError, MatroidError, PosetError, StructureError};
pub use matroid::{Matroid, Molecule, MultiplicityFunction, SlicedMultiplicity};
pub use monoid::{BinomialRelation, FormalExpr, MonotoneFunction, NearChainExpr};
pub use poset::{Poset, UpperSet};
pub use structure::{ConeDescription, InteriorGenerators, LevelFunction};
