//! Barile-Macchia critical cells, Betti tables and related invariants for
//! squarefree monomial ideals, with closed neighborhood ideals of trees as
//! the main case.

pub mod betti;
pub mod bm;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod formulas;
pub mod graphs;
pub mod homology;
pub mod ideals;
pub mod io;
pub mod survey;
pub mod tree_bm;

pub use betti::{BettiTable, TableKind};
pub use error::{Error, Result};
