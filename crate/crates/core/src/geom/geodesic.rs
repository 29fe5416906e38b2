use super::{GeneralizedBall, GeomError, Point, PolyCurve, ARC_SAMPLES, EPS_GEOM};

/// Carrier of a hyperbolic chord: the circle or line it lives on, and which
/// part of it the chord occupies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChordCarrier {
    /// Straight segment between the endpoints.
    Segment,
    /// Circular arc: counterclockwise from `start` by `sweep` radians
    /// (`sweep` may be negative for a clockwise arc).
    Arc {
        center: Point,
        radius: f64,
        start: f64,
        sweep: f64,
    },
    /// The straight line through the endpoints minus the open segment
    /// between them; passes through infinity. Arises only for diametrically
    /// opposite points on an exterior ball.
    TwoRays,
}

/// A hyperbolic geodesic chord of a generalized ball with both endpoints on
/// the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub ball: GeneralizedBall,
    pub a: Point,
    pub b: Point,
    pub carrier: ChordCarrier,
}

impl Chord {
    /// The geodesic of `ball` joining boundary points `a` and `b`: the arc of
    /// the circle through them orthogonal to the ball boundary, interior to
    /// the ball. Endpoints within a loose boundary tolerance are snapped to
    /// the boundary first.
    pub fn geodesic(ball: GeneralizedBall, a: Point, b: Point) -> Result<Chord, GeomError> {
        let scale = match ball {
            GeneralizedBall::Disk { radius, .. } | GeneralizedBall::ExteriorDisk { radius, .. } => {
                radius
            }
            GeneralizedBall::HalfPlane { .. } => a.dist(b),
        };
        let tol = 1e-6 * (1.0 + scale);
        if !ball.on_boundary(a, tol) || !ball.on_boundary(b, tol) {
            return Err(GeomError::NotOnBoundary);
        }
        let a = snap_to_boundary(ball, a);
        let b = snap_to_boundary(ball, b);
        if a.close(b, EPS_GEOM) {
            return Err(GeomError::InvalidCurve("chord endpoints coincide".into()));
        }

        match ball {
            GeneralizedBall::HalfPlane { .. } => {
                // Euclidean semicircle over [a, b] into the half-plane.
                let center = (a + b) * 0.5;
                let radius = a.dist(b) * 0.5;
                let start = (a - center).angle();
                let mid_ccw = center + Point::unit_rad(start + std::f64::consts::FRAC_PI_2) * radius;
                let sweep = if ball.strictly_inside(mid_ccw, 0.0) {
                    std::f64::consts::PI
                } else {
                    -std::f64::consts::PI
                };
                Ok(Chord {
                    ball,
                    a,
                    b,
                    carrier: ChordCarrier::Arc {
                        center,
                        radius,
                        start,
                        sweep,
                    },
                })
            }
            GeneralizedBall::Disk { center: c, radius: r }
            | GeneralizedBall::ExteriorDisk { center: c, radius: r } => {
                let antipodal = ((a - c) + (b - c)).norm() <= 1e-9 * r;
                if antipodal {
                    let carrier = if matches!(ball, GeneralizedBall::Disk { .. }) {
                        ChordCarrier::Segment
                    } else {
                        ChordCarrier::TwoRays
                    };
                    return Ok(Chord { ball, a, b, carrier });
                }
                // Orthogonal circle through a and b:
                //   2(a - c).o = r^2 + |a|^2 - |c|^2
                //   2(b - a).o = |b|^2 - |a|^2
                let r1 = a - c;
                let r2 = b - a;
                let k1 = 0.5 * (r * r + a.norm_sq() - c.norm_sq());
                let k2 = 0.5 * (b.norm_sq() - a.norm_sq());
                let det = r1.cross(r2);
                if det.abs() < 1e-14 * (1.0 + r1.norm() * r2.norm()) {
                    // a, b, c collinear but not antipodal: orthogonal circle
                    // degenerates to the line through a and b.
                    let carrier = if matches!(ball, GeneralizedBall::Disk { .. }) {
                        ChordCarrier::Segment
                    } else {
                        ChordCarrier::TwoRays
                    };
                    return Ok(Chord { ball, a, b, carrier });
                }
                let ox = (k1 * r2.y - k2 * r1.y) / det;
                let oy = (r1.x * k2 - r2.x * k1) / det;
                let o = Point::new(ox, oy);
                let rho = o.dist(a);
                let start = (a - o).angle();
                let end = (b - o).angle();
                let ccw = (end - start).rem_euclid(std::f64::consts::TAU);
                let mid_ccw = o + Point::unit_rad(start + ccw / 2.0) * rho;
                let sweep = if ball.strictly_inside(mid_ccw, 0.0) {
                    ccw
                } else {
                    ccw - std::f64::consts::TAU
                };
                Ok(Chord {
                    ball,
                    a,
                    b,
                    carrier: ChordCarrier::Arc {
                        center: o,
                        radius: rho,
                        start,
                        sweep,
                    },
                })
            }
        }
    }

    /// Point of the chord at fraction `t` in [0, 1] from `a` to `b`.
    /// Undefined for `TwoRays` carriers.
    pub fn point_at(&self, t: f64) -> Option<Point> {
        match self.carrier {
            ChordCarrier::Segment => Some(self.a.lerp(self.b, t)),
            ChordCarrier::Arc {
                center,
                radius,
                start,
                sweep,
            } => Some(center + Point::unit_rad(start + sweep * t) * radius),
            ChordCarrier::TwoRays => None,
        }
    }

    /// Discretized polyline with `n` segments. Errors for through-infinity
    /// chords, which have no bounded polyline.
    pub fn polyline(&self, n: usize) -> Result<PolyCurve, GeomError> {
        if matches!(self.carrier, ChordCarrier::TwoRays) {
            return Err(GeomError::GeodesicThroughInfinity);
        }
        let pts: Vec<Point> = (0..=n)
            .map(|k| self.point_at(k as f64 / n as f64).unwrap())
            .collect();
        // Collapse consecutive duplicates that a tiny arc might produce.
        let mut out = Vec::with_capacity(pts.len());
        for p in pts {
            if out.last().map_or(true, |&q: &Point| !p.close(q, EPS_GEOM / 4.0)) {
                out.push(p);
            }
        }
        if out.len() < 2 {
            out = vec![self.a, self.b];
        }
        PolyCurve::open(out)
    }

    /// Distance from `p` to the chord.
    pub fn distance_to(&self, p: Point) -> f64 {
        match self.carrier {
            ChordCarrier::Segment => super::segment_distance(p, self.a, self.b),
            ChordCarrier::Arc {
                center,
                radius,
                start,
                sweep,
            } => {
                let v = p - center;
                let ang = v.angle();
                let rel = (ang - start) * sweep.signum();
                let span = sweep.abs();
                let rel = rel.rem_euclid(std::f64::consts::TAU);
                if rel <= span {
                    (v.norm() - radius).abs()
                } else {
                    p.dist(self.a).min(p.dist(self.b))
                }
            }
            ChordCarrier::TwoRays => {
                let dir = (self.b - self.a).normalize();
                let s = (p - self.a).dot(dir);
                let len = self.a.dist(self.b);
                if s <= 0.0 {
                    // Beyond a: on the ray side.
                    (p - self.a).cross(dir).abs()
                } else if s >= len {
                    (p - self.b).cross(dir).abs()
                } else {
                    p.dist(self.a).min(p.dist(self.b))
                }
            }
        }
    }

    /// Sign of `p` relative to the carrier circle or line; the chord
    /// separates its ball into the two sign regions.
    pub fn carrier_side(&self, p: Point) -> f64 {
        match self.carrier {
            ChordCarrier::Segment | ChordCarrier::TwoRays => (self.b - self.a).cross(p - self.a),
            ChordCarrier::Arc { center, radius, .. } => p.dist(center) - radius,
        }
    }
}

/// Project a near-boundary point exactly onto the ball boundary.
fn snap_to_boundary(ball: GeneralizedBall, p: Point) -> Point {
    match ball {
        GeneralizedBall::Disk { center, radius }
        | GeneralizedBall::ExteriorDisk { center, radius } => {
            center + (p - center).normalize() * radius
        }
        GeneralizedBall::HalfPlane { point, normal } => p - normal * (p - point).dot(normal),
    }
}

/// Polyline discretization (with [`ARC_SAMPLES`] segments) of the hyperbolic
/// geodesic of `ball` joining boundary points `a` and `b`.
pub fn hyperbolic_geodesic(
    ball: GeneralizedBall,
    a: Point,
    b: Point,
) -> Result<PolyCurve, GeomError> {
    hyperbolic_geodesic_with(ball, a, b, ARC_SAMPLES)
}

pub fn hyperbolic_geodesic_with(
    ball: GeneralizedBall,
    a: Point,
    b: Point,
    n: usize,
) -> Result<PolyCurve, GeomError> {
    Chord::geodesic(ball, a, b)?.polyline(n.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diameter_is_straight() {
        let ball = GeneralizedBall::disk(Point::ZERO, 1.0);
        let g = hyperbolic_geodesic(ball, Point::new(1.0, 0.0), Point::new(-1.0, 0.0)).unwrap();
        for p in g.vertices() {
            assert!(p.y.abs() < 1e-12);
        }
        assert!(g.vertices()[0].close(Point::new(1.0, 0.0), 1e-12));
    }

    #[test]
    fn half_plane_semicircle() {
        // In the half-plane Im z >= 1 the geodesic joining -1+i and 1+i is
        // the semicircle centered at i with radius 1 lying above Im z = 1.
        let ball = GeneralizedBall::half_plane(Point::new(0.0, 1.0), Point::new(0.0, 1.0));
        let g = hyperbolic_geodesic(ball, Point::new(-1.0, 1.0), Point::new(1.0, 1.0)).unwrap();
        for p in g.vertices() {
            assert!((p.dist(Point::new(0.0, 1.0)) - 1.0).abs() < 1e-9);
            assert!(p.y >= 1.0 - 1e-9);
        }
        let mid = g.point_at(0.5);
        assert!(mid.close(Point::new(0.0, 2.0), 1e-6));
    }

    /// Orthogonal-circle construction oracle: endpoints reproduced, interior
    /// samples inside the ball, and the carrier circle crosses the boundary
    /// at right angles (dot-product residual at the endpoints).
    #[test]
    fn quarter_circle_chord_is_orthogonal() {
        let ball = GeneralizedBall::disk(Point::ZERO, 1.0);
        let a = Point::new(1.0, 0.0);
        let b = Point::new(0.0, 1.0);
        let chord = Chord::geodesic(ball, a, b).unwrap();
        let (center, radius) = match chord.carrier {
            ChordCarrier::Arc { center, radius, .. } => (center, radius),
            _ => panic!("expected arc"),
        };
        // Orthogonality: |o|^2 = r^2 + rho^2 with r = 1.
        assert!((center.norm_sq() - (1.0 + radius * radius)).abs() < 1e-9);
        // Tangent directions at the endpoint are perpendicular.
        let t1 = (a - Point::ZERO).perp();
        let t2 = (a - center).perp();
        assert!(t1.normalize().dot(t2.normalize()).abs() < 1e-9);

        let poly = chord.polyline(64).unwrap();
        assert!(poly.vertices()[0].close(a, EPS_GEOM));
        assert!(poly.vertices().last().unwrap().close(b, EPS_GEOM));
        for p in &poly.vertices()[1..poly.len() - 1] {
            assert!(ball.strictly_inside(*p, 0.0), "sample {p} escaped the disk");
        }
    }

    #[test]
    fn exterior_ball_chord_stays_outside() {
        let ball = GeneralizedBall::exterior_disk(Point::ZERO, 2.0f64.sqrt());
        let a = Point::new(1.0, 1.0);
        let b = Point::new(1.0, -1.0);
        let g = hyperbolic_geodesic(ball, a, b).unwrap();
        for p in &g.vertices()[1..g.len() - 1] {
            assert!(p.norm() > 2.0f64.sqrt());
        }
        // The carrier is the circle of radius sqrt(2) centered at 2.
        let chord = Chord::geodesic(ball, a, b).unwrap();
        match chord.carrier {
            ChordCarrier::Arc { center, radius, .. } => {
                assert!(center.close(Point::new(2.0, 0.0), 1e-9));
                assert!((radius - 2.0f64.sqrt()).abs() < 1e-9);
            }
            _ => panic!("expected arc"),
        }
    }

    #[test]
    fn antipodal_exterior_chord_passes_through_infinity() {
        let ball = GeneralizedBall::exterior_disk(Point::ZERO, 1.0);
        let chord =
            Chord::geodesic(ball, Point::new(1.0, 0.0), Point::new(-1.0, 0.0)).unwrap();
        assert_eq!(chord.carrier, ChordCarrier::TwoRays);
        assert!(chord.polyline(8).is_err());
        assert!(chord.distance_to(Point::new(3.0, 0.0)) < 1e-12);
        assert!(chord.distance_to(Point::new(0.5, 0.0)) > 0.4);
    }

    #[test]
    fn off_boundary_endpoint_rejected() {
        let ball = GeneralizedBall::disk(Point::ZERO, 1.0);
        assert_eq!(
            Chord::geodesic(ball, Point::new(0.5, 0.0), Point::new(-1.0, 0.0)).unwrap_err(),
            GeomError::NotOnBoundary
        );
    }
}
