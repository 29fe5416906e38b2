//! Kulkarni-Pinkall machinery: maximal balls, hyperbolic hulls of contact
//! sets, chords and gaps, inversion-based point location, and partition
//! validation.

mod balls;
mod chords;
mod contacts;
mod element;
mod locate;

pub use balls::{maximal_balls, maximal_balls_inside};
pub use chords::{chords_between, partition_check, ChordsBetween, PartitionReport};
pub use contacts::{contact_components, ContactComponent};
pub use element::{kp_element, HullStyle, KPElement};
pub use locate::{kp_locate, smallest_ball_of_inverted_boundary};

use crate::geom::{GeneralizedBall, GeomError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KpError {
    #[error("point lies in the continuum")]
    PointInContinuum,
    #[error("continuum is degenerate: {0}")]
    DegenerateRegion(String),
    #[error("ball has fewer than two boundary contacts with the continuum")]
    NotMaximal,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A closed round ball with empty interior intersection with the continuum
/// and at least two boundary contact points, together with its contact set.
#[derive(Debug, Clone)]
pub struct MaximalBall {
    pub ball: GeneralizedBall,
    /// Contact components in boundary order (ball on the left).
    pub contacts: Vec<ContactComponent>,
}

impl MaximalBall {
    /// Number of distinct contact points, counting an arc component as two.
    pub fn contact_point_count(&self) -> usize {
        self.contacts
            .iter()
            .map(|c| if c.is_point() { 1 } else { 2 })
            .sum()
    }

    /// Whether the hull of the contact set has nonempty interior.
    pub fn supports_gap(&self) -> bool {
        self.contacts.iter().any(|c| !c.is_point()) || self.contacts.len() >= 3
    }
}
