use super::{Point, EPS_GEOM};
use serde::{Deserialize, Serialize};

/// A closed round ball of the sphere drawn in the plane chart: a closed
/// disk, a closed half-plane, or the closed exterior of a disk (the latter
/// two contain the point at infinity implicitly).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GeneralizedBall {
    Disk { center: Point, radius: f64 },
    ExteriorDisk { center: Point, radius: f64 },
    /// `{ z : (z - point) . normal >= 0 }` with `normal` unit length.
    HalfPlane { point: Point, normal: Point },
}

/// Boundary circle or line of a generalized ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BallBoundary {
    Circle { center: Point, radius: f64 },
    Line { point: Point, dir: Point },
}

impl GeneralizedBall {
    pub fn disk(center: Point, radius: f64) -> Self {
        assert!(radius >= 0.0);
        GeneralizedBall::Disk { center, radius }
    }

    pub fn exterior_disk(center: Point, radius: f64) -> Self {
        assert!(radius > 0.0);
        GeneralizedBall::ExteriorDisk { center, radius }
    }

    pub fn half_plane(point: Point, normal: Point) -> Self {
        GeneralizedBall::HalfPlane {
            point,
            normal: normal.normalize(),
        }
    }

    pub fn contains_infinity(&self) -> bool {
        !matches!(self, GeneralizedBall::Disk { .. })
    }

    /// Signed distance to the boundary: negative inside the ball, positive
    /// outside.
    pub fn signed_boundary_distance(&self, p: Point) -> f64 {
        match *self {
            GeneralizedBall::Disk { center, radius } => p.dist(center) - radius,
            GeneralizedBall::ExteriorDisk { center, radius } => radius - p.dist(center),
            GeneralizedBall::HalfPlane { point, normal } => -(p - point).dot(normal),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        self.signed_boundary_distance(p) <= EPS_GEOM
    }

    pub fn strictly_inside(&self, p: Point, eps: f64) -> bool {
        self.signed_boundary_distance(p) < -eps
    }

    pub fn on_boundary(&self, p: Point, eps: f64) -> bool {
        self.signed_boundary_distance(p).abs() <= eps
    }

    pub fn boundary(&self) -> BallBoundary {
        match *self {
            GeneralizedBall::Disk { center, radius }
            | GeneralizedBall::ExteriorDisk { center, radius } => {
                BallBoundary::Circle { center, radius }
            }
            GeneralizedBall::HalfPlane { point, normal } => BallBoundary::Line {
                point,
                dir: Point::new(normal.y, -normal.x),
            },
        }
    }

    /// Boundary parameter of a point assumed on the boundary. The parameter
    /// increases so that the ball lies on the left: counterclockwise angle in
    /// turns for disks, clockwise angle for exterior disks, and the signed
    /// line coordinate for half-planes (wrapping through infinity).
    pub fn boundary_param(&self, p: Point) -> f64 {
        match *self {
            GeneralizedBall::Disk { center, .. } => {
                let t = (p - center).angle() / std::f64::consts::TAU;
                t.rem_euclid(1.0)
            }
            GeneralizedBall::ExteriorDisk { center, .. } => {
                let t = -(p - center).angle() / std::f64::consts::TAU;
                t.rem_euclid(1.0)
            }
            GeneralizedBall::HalfPlane { point, normal } => {
                (p - point).dot(Point::new(normal.y, -normal.x))
            }
        }
    }

    /// Inverse of [`boundary_param`].
    pub fn boundary_point(&self, t: f64) -> Point {
        match *self {
            GeneralizedBall::Disk { center, radius } => center + Point::unit(t) * radius,
            GeneralizedBall::ExteriorDisk { center, radius } => center + Point::unit(-t) * radius,
            GeneralizedBall::HalfPlane { point, normal } => {
                point + Point::new(normal.y, -normal.x) * t
            }
        }
    }

    /// Whether boundary params are cyclic (true) or linear-through-infinity
    /// (false, half-planes).
    pub fn cyclic_boundary(&self) -> bool {
        !matches!(self, GeneralizedBall::HalfPlane { .. })
    }

    /// Representative interior point.
    pub fn interior_point(&self) -> Point {
        match *self {
            GeneralizedBall::Disk { center, .. } => center,
            GeneralizedBall::ExteriorDisk { center, radius } => {
                center + Point::new(2.0 * radius, 0.0)
            }
            GeneralizedBall::HalfPlane { point, normal } => point + normal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plane_membership() {
        // Im z >= 1
        let b = GeneralizedBall::half_plane(Point::new(0.0, 1.0), Point::new(0.0, 1.0));
        assert!(b.contains(Point::new(5.0, 2.0)));
        assert!(!b.contains(Point::new(0.0, 0.5)));
        assert!(b.on_boundary(Point::new(-3.0, 1.0), 1e-12));
    }

    #[test]
    fn exterior_disk_membership() {
        let b = GeneralizedBall::exterior_disk(Point::ZERO, 2.0_f64.sqrt());
        assert!(b.contains(Point::new(2.0, 2.0)));
        assert!(!b.contains(Point::ZERO));
        assert!(b.on_boundary(Point::new(1.0, 1.0), 1e-12));
    }

    #[test]
    fn boundary_param_orientation() {
        // Ball on the left of increasing parameter, for all three kinds.
        let d = GeneralizedBall::disk(Point::ZERO, 1.0);
        let p0 = d.boundary_point(0.0);
        let p1 = d.boundary_point(0.01);
        let tangent = p1 - p0;
        let inward = Point::ZERO - p0;
        assert!(tangent.cross(inward) > 0.0);

        let e = GeneralizedBall::exterior_disk(Point::ZERO, 1.0);
        let q0 = e.boundary_point(0.0);
        let q1 = e.boundary_point(0.01);
        let tangent = q1 - q0;
        let inward = q0 * 2.0 - q0; // outward from origin = into the ball
        assert!(tangent.cross(inward) > 0.0);

        let h = GeneralizedBall::half_plane(Point::new(0.0, 1.0), Point::new(0.0, 1.0));
        let r0 = h.boundary_point(0.0);
        let r1 = h.boundary_point(0.5);
        let tangent = (r1 - r0).normalize();
        let inward = Point::new(0.0, 1.0);
        assert!(tangent.cross(inward) > 0.0);
    }

    #[test]
    fn param_roundtrip() {
        for ball in [
            GeneralizedBall::disk(Point::new(1.0, -2.0), 3.0),
            GeneralizedBall::exterior_disk(Point::new(0.5, 0.5), 1.5),
        ] {
            for k in 0..8 {
                let t = k as f64 / 8.0;
                let p = ball.boundary_point(t);
                assert!(ball.on_boundary(p, 1e-12));
                let t2 = ball.boundary_param(p);
                assert!((t - t2).abs() < 1e-12 || (t - t2).abs() > 1.0 - 1e-12);
            }
        }
    }
}
