//! Exact invariant laminations on the circle R/Z: angle-multiplication
//! dynamics, invariance axioms, leaf-length expansion, periodic leaves, and
//! finite quotient-tree models.
//!
//! All arithmetic is rational; nothing in this module touches floating
//! point.

mod angle;
mod lamination;
mod quotient;

pub use angle::{sigma, Angle};
pub use lamination::{
    check_invariant, find_periodic_leaf, leaf_length, refine, AxiomReport, Class,
    FiniteLamination, Leaf,
};
pub use quotient::{
    periodic_cutpoints, quotient_tree, weakly_repelling_certificate, QuotientTree, TreeVertex,
    WeaklyRepellingVerdict,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LamError {
    #[error("a class needs at least one angle")]
    EmptyClass,
    #[error("not a leaf (need exactly two angles)")]
    NotALeaf,
    #[error("no periodic leaf found (chord set not forward invariant?)")]
    NoPeriodicLeaf,
    #[error("lamination is not region-refined: {0}")]
    NotRefined(String),
    #[error("chord system leaves a cycle; the dual graph is not a tree")]
    NotATree,
    #[error("vertex is not fixed under the induced map")]
    NotFixed,
    #[error("preimage angles of a class cannot be grouped into unlinked transversal classes")]
    NotRefinable,
    #[error("invalid lamination: {0}")]
    Invalid(String),
}
