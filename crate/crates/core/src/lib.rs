//! Hypergraph dominance through compound-matrix ranks, exterior and
//! combinatorial shifting with respect to term orders, and reduced rational
//! homology of uniform complexes, together with the constructions and
//! verification campaigns for Turán-type extremal statements.

pub mod combinatorics;
pub mod constructions;
pub mod dominance;
pub mod campaign;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod shifting;

pub use error::{Error, Result};
