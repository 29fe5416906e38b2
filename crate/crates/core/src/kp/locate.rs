use super::element::{element_of, HullStyle, KPElement};
use super::KpError;
use crate::geom::{
    circumcircle, invert, smallest_enclosing_circle, Circle, GeneralizedBall, Point,
    PolyContinuum, EPS_GEOM,
};

/// Image of one boundary segment under inversion about the query point: a
/// straight segment (collinear case) or a circular arc avoiding the center.
#[derive(Debug, Clone, Copy)]
enum InvArc {
    Seg(Point, Point),
    Arc {
        center: Point,
        radius: f64,
        start: f64,
        sweep: f64,
    },
}

impl InvArc {
    fn endpoints(&self) -> (Point, Point) {
        match *self {
            InvArc::Seg(a, b) => (a, b),
            InvArc::Arc {
                center,
                radius,
                start,
                sweep,
            } => (
                center + Point::unit_rad(start) * radius,
                center + Point::unit_rad(start + sweep) * radius,
            ),
        }
    }

    /// The point of the arc farthest from `g` and its distance.
    fn farthest_from(&self, g: Point) -> (Point, f64) {
        match *self {
            InvArc::Seg(a, b) => {
                let (da, db) = (g.dist(a), g.dist(b));
                if da >= db {
                    (a, da)
                } else {
                    (b, db)
                }
            }
            InvArc::Arc {
                center,
                radius,
                start,
                sweep,
            } => {
                let mut best = {
                    let (a, b) = self.endpoints();
                    let (da, db) = (g.dist(a), g.dist(b));
                    if da >= db {
                        (a, da)
                    } else {
                        (b, db)
                    }
                };
                // The far pole of the full circle, if it lies on the arc.
                let v = center - g;
                if v.norm() > 1e-300 {
                    let pole = center + v.normalize() * radius;
                    let ang = (pole - center).angle();
                    if angle_on_arc(ang, start, sweep) {
                        let d = g.dist(pole);
                        if d > best.1 {
                            best = (pole, d);
                        }
                    }
                }
                best
            }
        }
    }
}

fn angle_on_arc(ang: f64, start: f64, sweep: f64) -> bool {
    let rel = (ang - start) * sweep.signum();
    let rel = rel.rem_euclid(std::f64::consts::TAU);
    rel <= sweep.abs()
}

fn invert_segment(a: Point, b: Point, p: Point) -> Option<InvArc> {
    let ia = invert(a, p).ok()?;
    let ib = invert(b, p).ok()?;
    let cross = (b - a).cross(p - a);
    let scale = (b - a).norm() * (1.0 + (p - a).norm());
    if cross.abs() <= 1e-12 * scale {
        return Some(InvArc::Seg(ia, ib));
    }
    // The segment's line maps to a circle through p; the segment itself maps
    // to the arc from ia to ib avoiding p. A third sample pins the side.
    let im = invert(a.lerp(b, 0.5), p).ok()?;
    let c = circumcircle(ia, im, ib)?;
    let sa = (ia - c.center).angle();
    let sm = (im - c.center).angle();
    let sb = (ib - c.center).angle();
    let ccw_mid = (sm - sa).rem_euclid(std::f64::consts::TAU);
    let ccw_end = (sb - sa).rem_euclid(std::f64::consts::TAU);
    let sweep = if ccw_mid <= ccw_end {
        ccw_end
    } else {
        ccw_end - std::f64::consts::TAU
    };
    Some(InvArc::Arc {
        center: c.center,
        radius: c.radius,
        start: sa,
        sweep,
    })
}

/// Smallest circle enclosing the inverted boundary of `k` about `p`:
/// point-based Welzl plus farthest-violator insertion over the exact arcs.
pub fn smallest_ball_of_inverted_boundary(
    k: &PolyContinuum,
    p: Point,
) -> Result<Circle, KpError> {
    let mut arcs: Vec<InvArc> = Vec::new();
    for (a, b) in k.boundary_segments() {
        match invert_segment(a, b, p) {
            Some(arc) => arcs.push(arc),
            None => return Err(KpError::PointInContinuum),
        }
    }
    if arcs.is_empty() {
        // A single-point continuum.
        let pts = k.corner_points();
        if pts.is_empty() {
            return Err(KpError::DegenerateRegion("empty continuum".into()));
        }
        let q = invert(pts[0], p).map_err(|_| KpError::PointInContinuum)?;
        return Ok(Circle {
            center: q,
            radius: 0.0,
        });
    }
    let mut pts: Vec<Point> = Vec::new();
    for arc in &arcs {
        let (a, b) = arc.endpoints();
        pts.push(a);
        pts.push(b);
        // A few interior warm-start samples keep the loop short.
        if let InvArc::Arc {
            center,
            radius,
            start,
            sweep,
        } = *arc
        {
            for k in 1..4 {
                let t = start + sweep * k as f64 / 4.0;
                pts.push(center + Point::unit_rad(t) * radius);
            }
        }
    }
    let mut circle = smallest_enclosing_circle(&pts).unwrap();
    for _ in 0..128 {
        let mut worst: Option<(Point, f64)> = None;
        for arc in &arcs {
            let (q, d) = arc.farthest_from(circle.center);
            if worst.as_ref().map_or(true, |w| d > w.1) {
                worst = Some((q, d));
            }
        }
        let (q, d) = worst.unwrap();
        if d <= circle.radius * (1.0 + 1e-13) + 1e-13 {
            break;
        }
        pts.push(q);
        circle = smallest_enclosing_circle(&pts).unwrap();
    }
    Ok(circle)
}

/// Locate the Kulkarni-Pinkall element containing `p` by the inversion
/// construction: invert about `p`, take the smallest ball of the image, and
/// pull its exterior back. Never enumerates candidate balls.
pub fn kp_locate(p: Point, k: &PolyContinuum) -> Result<KPElement, KpError> {
    let scale = k.bounding_box().diameter().max(1.0);
    if k.distance_to(p) <= EPS_GEOM * (1.0 + scale) {
        return Err(KpError::PointInContinuum);
    }
    let circle = smallest_ball_of_inverted_boundary(k, p)?;
    let d = circle.center - p;
    let delta = d.norm_sq() - circle.radius * circle.radius;
    let rel = d.norm_sq() + circle.radius * circle.radius;

    let ball = if delta.abs() <= 1e-9 * rel.max(1e-12) {
        // The image circle passes through p: the pullback is a half-plane.
        half_plane_pullback(p, circle)
    } else {
        let center = p + d / delta;
        let radius = circle.radius / delta.abs();
        if delta < 0.0 {
            GeneralizedBall::disk(center, radius)
        } else {
            GeneralizedBall::exterior_disk(center, radius)
        }
    };

    // Contacts with a tolerance ladder: the inversion path carries a little
    // numeric fuzz.
    let mut tol = 1e-9 * (1.0 + scale);
    for _ in 0..6 {
        match element_of(ball, k, tol, HullStyle::Hyperbolic) {
            Ok(el) => return Ok(el),
            Err(KpError::NotMaximal) => tol *= 10.0,
            Err(e) => return Err(e),
        }
    }
    Err(KpError::NotMaximal)
}

fn half_plane_pullback(p: Point, circle: Circle) -> GeneralizedBall {
    // Two circle points well away from p map to two line points.
    let to_p = (p - circle.center).normalize();
    let s1 = circle.center + to_p.perp() * circle.radius;
    let s2 = circle.center - to_p.perp() * circle.radius;
    let q1 = invert(s1, p).expect("s1 away from p");
    let q2 = invert(s2, p).expect("s2 away from p");
    // A far point of the exterior of the circle maps into the ball.
    let z_far = circle.center - to_p * (10.0 * circle.radius);
    let w = invert(z_far, p).expect("far point away from p");
    let dir = (q2 - q1).normalize();
    let mut normal = dir.perp();
    if (w - q1).dot(normal) < 0.0 {
        normal = normal * -1.0;
    }
    GeneralizedBall::half_plane(q1, normal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> PolyContinuum {
        PolyContinuum::polygon(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn locates_semi_disk_above_square() {
        let k = unit_square();
        let el = kp_locate(Point::new(0.0, 1.5), &k).unwrap();
        match el.ball.ball {
            GeneralizedBall::HalfPlane { point, normal } => {
                assert!(normal.close(Point::new(0.0, 1.0), 1e-7));
                assert!((point.y - 1.0).abs() < 1e-7);
            }
            other => panic!("expected the half-plane Im z >= 1, got {other:?}"),
        }
        assert!(el.is_gap);
        assert!(el.contains(Point::new(0.0, 1.5)));
    }

    #[test]
    fn locates_exterior_ball_at_the_diagonal() {
        let k = unit_square();
        let el = kp_locate(Point::new(2.0, 2.0), &k).unwrap();
        match el.ball.ball {
            GeneralizedBall::ExteriorDisk { center, radius } => {
                assert!(center.close(Point::ZERO, 1e-7));
                assert!((radius - 2.0f64.sqrt()).abs() < 1e-7);
            }
            other => panic!("expected the exterior sqrt(2) ball, got {other:?}"),
        }
        assert!(el.contains(Point::new(2.0, 2.0)));
    }

    #[test]
    fn point_inside_continuum_rejected() {
        let k = unit_square();
        assert!(matches!(
            kp_locate(Point::ZERO, &k),
            Err(KpError::PointInContinuum)
        ));
    }

    #[test]
    fn chord_region_point_gets_two_contact_ball() {
        // Between the top half-plane's semi-disk and the exterior ball there
        // are two-vertex circle chords; a point there locates to a
        // two-contact element whose chord passes through it.
        let k = unit_square();
        let p = Point::new(0.9, 1.7);
        let el = kp_locate(p, &k).unwrap();
        assert!(el.contains(p), "element {:?} misses {p}", el.ball.ball);
        if !el.is_gap {
            assert_eq!(el.ball.contacts.len(), 2);
        }
    }

    #[test]
    fn segment_continuum_locate() {
        let k = PolyContinuum::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0));
        // Above the segment: the half-plane y >= 0, hull = upper half-disk.
        let el = kp_locate(Point::new(0.2, 0.4), &k).unwrap();
        match el.ball.ball {
            GeneralizedBall::HalfPlane { normal, point } => {
                assert!(normal.close(Point::new(0.0, 1.0), 1e-7));
                assert!(point.y.abs() < 1e-7);
            }
            other => panic!("expected half-plane y >= 0, got {other:?}"),
        }
        assert!(el.contains(Point::new(0.2, 0.4)));
        // Far on the real axis: the exterior unit ball, chord through
        // infinity along the axis.
        let el = kp_locate(Point::new(3.0, 0.0), &k).unwrap();
        match el.ball.ball {
            GeneralizedBall::ExteriorDisk { center, radius } => {
                assert!(center.close(Point::ZERO, 1e-7));
                assert!((radius - 1.0).abs() < 1e-7);
            }
            other => panic!("expected exterior unit ball, got {other:?}"),
        }
        assert!(el.contains(Point::new(3.0, 0.0)));
    }
}
