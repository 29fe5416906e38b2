//! Computable machinery for fixed-point theory of plane continua.
//!
//! The crate is organized around a small exact-tolerance geometry kernel
//! ([`geom`]) and the structures built on top of it:
//!
//! * [`index_var`] — degree, index and Bell variation of plane maps on
//!   curves, junction crossing counts, the index = variation + 1 identity,
//!   the lollipop identity, and quadtree fixed-point localization.
//! * [`kp`] — maximal balls, hyperbolic hulls, Kulkarni-Pinkall chords and
//!   gaps, and inversion-based point location in the partition.
//! * [`schoenflies`] — extension of a boundary homeomorphism of a Jordan
//!   polygon over the enclosed disk via the interior chord lamination.
//! * [`lam`] — exact invariant laminations on the circle with quotient
//!   tree models.
//! * [`dendrite`] — exact piecewise-linear dynamics on finite trees.
//! * [`polydyn`] — polynomial fixed points, local index, argument
//!   principle checks, external rays and crosscut variation.

pub mod dendrite;
pub mod geom;
pub mod index_var;
pub mod kp;
pub mod lam;
pub mod map;
pub mod polydyn;
pub mod schoenflies;

pub use geom::{GeneralizedBall, Point, PolyContinuum, PolyCurve};
pub use map::PlaneMap;
