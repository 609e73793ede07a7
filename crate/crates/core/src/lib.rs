//! Finite unramified covers of closed oriented surfaces, computed exactly.
//!
//! Covers are transitive permutation representations of the surface group.
//! On top of them the crate provides the lifted cell complex with its
//! intersection pairing, transfer of homology classes and train-track weights,
//! the normalized pairing on the direct limit over all covers, and the action
//! of virtual automorphisms given as two-arrow diagrams.

pub mod cli;
pub mod covers;
pub mod doc;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod surface;
pub mod tower;
pub mod traintrack;

pub use covers::{CoverArrow, CoverSpec};
pub use error::{Error, Result};
pub use surface::{GroupWord, HomologyClass, Letter, Surface};

/// Exact rational numbers used for weights and normalized pairings.
pub type Rational = num_rational::Ratio<i64>;
