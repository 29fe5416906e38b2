//! Degree, index, fractional index, junctions, Bell variation, and the
//! verification and search operations built from them.

mod circle_map;
pub mod fixtures;
mod index;
mod junction;
mod locate;
mod lollipop;
mod variation;

pub use circle_map::{circle_map_degree, circle_map_degree_with, CircleMapSamples};
pub use index::{fractional_index, index, index_with};
pub use junction::{make_junction, make_junction_from, Junction, Ray, RayKind};
pub use locate::{locate_fixed_points, Enclosure};
pub use lollipop::{lollipop_check, LollipopBranch, LollipopReport};
pub use variation::{variation_arc, variation_total, ArcPartition, VariationReport};

use crate::geom::GeomError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IndexVarError {
    #[error("a fixed point of the map lies on the curve (sampled |f(z)-z| <= eps_fix)")]
    FixedPointOnCurve,
    #[error("sample density cannot certify the lift: {0}")]
    InsufficientSamples(String),
    #[error("no escape path from the junction vertex to the escape box")]
    NoEscapePath,
    #[error("junction is invalid: {0}")]
    InvalidJunction(String),
    #[error("arc {arc}: image meets the arc (sampled distance <= eps_fix)")]
    ArcNotMovedOff { arc: usize },
    #[error("arc {arc}: an endpoint maps outside the topological hull of the curve")]
    EndpointEscapes { arc: usize },
    #[error("fixed points on the subdivision boundary persist after jitter retries")]
    BoundaryFixedPoint,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
