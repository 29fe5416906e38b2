//! Exact-tolerance planar primitives shared by all other modules.
//!
//! Coordinates are `f64`; point coincidence and on-curve tests use the
//! absolute tolerance [`EPS_GEOM`]. Operations that admit a tolerance or
//! sampling override have `*_with` variants.

mod ball;
mod curve;
mod enclosing;
mod geodesic;
mod inversion;
mod winding;

pub use ball::{BallBoundary, GeneralizedBall};
pub use curve::{
    segment_closest_t, segment_distance, segment_intersection, segments_intersect, PolyContinuum,
    PolyCurve,
};
pub use enclosing::{circumcircle, smallest_enclosing_ball, smallest_enclosing_circle, Circle};
pub use geodesic::{hyperbolic_geodesic, hyperbolic_geodesic_with, Chord, ChordCarrier};
pub use inversion::{invert, invert_circle, CircleOrLine};
pub use winding::{winding_number, winding_number_with};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

/// Absolute tolerance for point coincidence and on-curve tests.
pub const EPS_GEOM: f64 = 1e-9;

/// Minimum sampled `|f(z) - z|` certifying a curve fixed-point free.
pub const EPS_FIX: f64 = 1e-7;

/// Default number of segments in a discretized geodesic arc.
pub const ARC_SAMPLES: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("point lies on the curve (within tolerance)")]
    PointOnCurve,
    #[error("winding residual {0} exceeds 0.1; angle sum is not close to an integer")]
    WindingResidual(f64),
    #[error("inversion center coincides with the point")]
    AtCenter,
    #[error("point does not lie on the ball boundary")]
    NotOnBoundary,
    #[error("region is degenerate: {0}")]
    DegenerateRegion(String),
    #[error("curve is invalid: {0}")]
    InvalidCurve(String),
    #[error("geodesic passes through infinity and has no bounded polyline")]
    GeodesicThroughInfinity,
}

/// A point of the plane. Equality in the geometric sense is tested with
/// [`Point::close`], not `==`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ZERO: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Point on the unit circle at angle `t` in turns (full turn = 1).
    pub fn unit(t: f64) -> Self {
        Point::unit_rad(std::f64::consts::TAU * t)
    }

    /// Point on the unit circle at the given angle in radians.
    pub fn unit_rad(theta: f64) -> Self {
        Point::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Cross product z-component; positive when `other` is counterclockwise
    /// from `self`.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn close(self, other: Point, eps: f64) -> bool {
        self.dist(other) <= eps
    }

    pub fn normalize(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    /// Rotation by +90 degrees.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, s: f64) -> Point {
        Point::new(self.x / s, self.y / s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min: Point,
    pub max: Point,
}

impl Rect {
    pub fn new(min: Point, max: Point) -> Self {
        Rect { min, max }
    }

    pub fn from_points<'a, I: IntoIterator<Item = &'a Point>>(points: I) -> Option<Self> {
        let mut it = points.into_iter();
        let first = *it.next()?;
        let mut r = Rect::new(first, first);
        for p in it {
            r.min.x = r.min.x.min(p.x);
            r.min.y = r.min.y.min(p.y);
            r.max.x = r.max.x.max(p.x);
            r.max.y = r.max.y.max(p.y);
        }
        Some(r)
    }

    pub fn center(&self) -> Point {
        (self.min + self.max) * 0.5
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn diameter(&self) -> f64 {
        self.min.dist(self.max)
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    /// Scale about the center by `factor`.
    pub fn scaled(&self, factor: f64) -> Rect {
        let c = self.center();
        let half = (self.max - self.min) * (0.5 * factor);
        Rect::new(c - half, c + half)
    }

    /// Smallest rect containing both.
    pub fn union(&self, other: &Rect) -> Rect {
        Rect::new(
            Point::new(self.min.x.min(other.min.x), self.min.y.min(other.min.y)),
            Point::new(self.max.x.max(other.max.x), self.max.y.max(other.max.y)),
        )
    }

    /// The boundary as a counterclockwise closed polygon.
    pub fn boundary(&self) -> PolyCurve {
        PolyCurve::closed(vec![
            self.min,
            Point::new(self.max.x, self.min.y),
            self.max,
            Point::new(self.min.x, self.max.y),
        ])
        .expect("rect boundary is a simple polygon")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_algebra() {
        let p = Point::new(1.0, 2.0);
        let q = Point::new(-3.0, 0.5);
        assert_eq!(p + q, Point::new(-2.0, 2.5));
        assert_eq!(p - q, Point::new(4.0, 1.5));
        assert!((p.cross(q) - (1.0 * 0.5 - 2.0 * (-3.0))).abs() < 1e-15);
        assert!(p.perp().dot(p).abs() < 1e-15);
    }

    #[test]
    fn rect_scaling() {
        let r = Rect::new(Point::new(-1.0, -1.0), Point::new(1.0, 1.0));
        let s = r.scaled(3.0);
        assert_eq!(s.min, Point::new(-3.0, -3.0));
        assert_eq!(s.max, Point::new(3.0, 3.0));
    }
}
