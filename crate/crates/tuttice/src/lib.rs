//! Exact lattice-point invariants of polymatroids.
//!
//! The central object is the counting polynomial Q(M;t,u), the number of
//! lattice points of the Minkowski sum of the base polytope with scaled
//! copies of the standard simplex and its reflection. Its rewriting
//! Q'(M;x,y) carries the same information as the Tutte polynomial on
//! matroids; this crate computes both, converts between them along three
//! independent routes, computes transfer-based basis activities and Dawson
//! partitions, reconstructs the top-degree cells of the associated mixed
//! subdivision, and ships a verification registry that replays every
//! supported identity on a given input.

pub mod activity;
pub mod checks;
pub mod cli;
pub mod core;
pub mod corpus;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod subdivision;
pub mod tutte;

pub use crate::core::{GroundSet, Polymatroid, RankFunction, Subset};
pub use crate::error::{Error, Result};
pub use crate::lattice::{BaseVector, SumPoint};
pub use crate::poly::{BinomialForm, BivarPoly, UniPoly};
