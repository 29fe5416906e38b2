use super::{KpError, MaximalBall};
use crate::geom::{BallBoundary, GeneralizedBall, Point, PolyContinuum};

/// A connected component of the contact set `∂B ∩ K`: a single point or a
/// straight sub-segment of the boundary (the latter only for line-bounded
/// balls). `start` and `end` are ordered by the boundary parameter (ball on
/// the left).
#[derive(Debug, Clone, Copy)]
pub struct ContactComponent {
    pub start: Point,
    pub end: Point,
    pub start_param: f64,
    pub end_param: f64,
}

impl ContactComponent {
    pub fn is_point(&self) -> bool {
        self.start.close(self.end, 1e-9)
    }
}

/// Compute the contact components of a ball against a continuum, assuming
/// the ball interior misses the continuum. `tol` is the boundary-distance
/// threshold for a contact.
pub fn contact_components(
    ball: GeneralizedBall,
    k: &PolyContinuum,
    tol: f64,
) -> Vec<ContactComponent> {
    // Collect contact items as boundary parameter intervals.
    let mut items: Vec<(f64, f64, Point, Point)> = Vec::new();
    for (a, b) in k.boundary_segments() {
        match ball.boundary() {
            BallBoundary::Circle { center, radius } => {
                for p in circle_segment_touch(center, radius, a, b, tol) {
                    let t = ball.boundary_param(p);
                    items.push((t, t, p, p));
                }
            }
            BallBoundary::Line { .. } => {
                let da = ball.signed_boundary_distance(a).abs();
                let db = ball.signed_boundary_distance(b).abs();
                if da <= tol && db <= tol {
                    // Collinear run: whole segment is contact.
                    let (ta, tb) = (ball.boundary_param(a), ball.boundary_param(b));
                    if ta <= tb {
                        items.push((ta, tb, a, b));
                    } else {
                        items.push((tb, ta, b, a));
                    }
                } else if da <= tol {
                    let t = ball.boundary_param(a);
                    items.push((t, t, a, a));
                } else if db <= tol {
                    let t = ball.boundary_param(b);
                    items.push((t, t, b, b));
                } else {
                    // Transversal touch of the open segment.
                    if let Some(p) = line_segment_touch(&ball, a, b, tol) {
                        let t = ball.boundary_param(p);
                        items.push((t, t, p, p));
                    }
                }
            }
        }
    }
    if items.is_empty() {
        return Vec::new();
    }

    // Merge items whose parameter ranges touch. Parameter closeness must be
    // measured in arc length on the boundary.
    let unit = match ball.boundary() {
        BallBoundary::Circle { radius, .. } => radius * std::f64::consts::TAU,
        BallBoundary::Line { .. } => 1.0,
    };
    let merge_tol = (tol * 4.0 / unit).max(1e-12);
    items.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut merged: Vec<(f64, f64, Point, Point)> = Vec::new();
    for it in items {
        if let Some(last) = merged.last_mut() {
            if it.0 - last.1 <= merge_tol {
                if it.1 > last.1 {
                    last.1 = it.1;
                    last.3 = it.3;
                }
                continue;
            }
        }
        merged.push(it);
    }
    // Cyclic wrap merge for circle boundaries.
    if ball.cyclic_boundary() && merged.len() > 1 {
        let first = merged[0];
        let last = *merged.last().unwrap();
        if first.0 + 1.0 - last.1 <= merge_tol {
            merged[0] = (last.0 - 1.0, first.1, last.2, first.3);
            merged.pop();
        }
    }
    merged
        .into_iter()
        .map(|(ts, te, ps, pe)| ContactComponent {
            start: ps,
            end: pe,
            start_param: ts,
            end_param: te,
        })
        .collect()
}

/// Build a `MaximalBall` from a candidate, validating emptiness of the
/// interior and the two-contact minimum.
pub fn validate_maximal(
    ball: GeneralizedBall,
    k: &PolyContinuum,
    tol: f64,
) -> Result<MaximalBall, KpError> {
    if !interior_empty(ball, k, tol) {
        return Err(KpError::NotMaximal);
    }
    let contacts = contact_components(ball, k, tol);
    let mb = MaximalBall { ball, contacts };
    if mb.contact_point_count() < 2 {
        return Err(KpError::NotMaximal);
    }
    Ok(mb)
}

/// `int(ball) ∩ K = ∅`, using convexity of disks and half-planes where
/// possible.
pub fn interior_empty(ball: GeneralizedBall, k: &PolyContinuum, tol: f64) -> bool {
    match ball {
        GeneralizedBall::Disk { center, radius } => k.distance_to(center) >= radius - tol,
        GeneralizedBall::ExteriorDisk { center, radius } => k
            .corner_points()
            .iter()
            .all(|&v| v.dist(center) <= radius + tol),
        GeneralizedBall::HalfPlane { point, normal } => k
            .corner_points()
            .iter()
            .all(|&v| (v - point).dot(normal) <= tol),
    }
}

/// Touch points of a circle with a closed segment, within tolerance: the
/// quadratic intersection, with the segment assumed to stay outside the open
/// disk (or outside the open exterior).
fn circle_segment_touch(center: Point, radius: f64, a: Point, b: Point, tol: f64) -> Vec<Point> {
    let d = b - a;
    let len_sq = d.norm_sq();
    let mut out = Vec::new();
    if len_sq == 0.0 {
        if (a.dist(center) - radius).abs() <= tol {
            out.push(a);
        }
        return out;
    }
    // Closest approach of the segment's line to the circle.
    let f = a - center;
    let qa = len_sq;
    let qb = 2.0 * f.dot(d);
    let qc = f.norm_sq() - radius * radius;
    let disc = qb * qb - 4.0 * qa * qc;
    let tol_disc = 4.0 * qa * tol * (radius.abs() + 1.0);
    if disc < -tol_disc {
        return out;
    }
    if disc.abs() <= tol_disc {
        // Tangency: a single touch point.
        let t = (-qb / (2.0 * qa)).clamp(0.0, 1.0);
        let p = a + d * t;
        if (p.dist(center) - radius).abs() <= tol {
            out.push(p);
        }
        return out;
    }
    let sq = disc.sqrt();
    for t in [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)] {
        if (-1e-9..=1.0 + 1e-9).contains(&t) {
            let p = a + d * t.clamp(0.0, 1.0);
            if (p.dist(center) - radius).abs() <= tol {
                out.push(p);
            }
        }
    }
    out
}

fn line_segment_touch(ball: &GeneralizedBall, a: Point, b: Point, tol: f64) -> Option<Point> {
    let sa = ball.signed_boundary_distance(a);
    let sb = ball.signed_boundary_distance(b);
    if (sa > tol && sb > tol) || (sa < -tol && sb < -tol) {
        return None;
    }
    if (sb - sa).abs() < 1e-300 {
        return None;
    }
    let t = (sa / (sa - sb)).clamp(0.0, 1.0);
    let p = a.lerp(b, t);
    if ball.signed_boundary_distance(p).abs() <= tol {
        Some(p)
    } else {
        None
    }
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
    fn half_plane_contact_is_the_top_edge() {
        let k = unit_square();
        let b = GeneralizedBall::half_plane(Point::new(0.0, 1.0), Point::new(0.0, 1.0));
        let comps = contact_components(b, &k, 1e-9);
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert!(!c.is_point());
        // Boundary param orientation: ball on the left of increasing param.
        // For the half-plane Im z >= 1 the line runs in direction (1, 0), so
        // the component goes from (-1,1) to (1,1).
        assert!(c.start.close(Point::new(-1.0, 1.0), 1e-9));
        assert!(c.end.close(Point::new(1.0, 1.0), 1e-9));
    }

    #[test]
    fn exterior_ball_contacts_are_the_corners() {
        let k = unit_square();
        let b = GeneralizedBall::exterior_disk(Point::ZERO, 2.0f64.sqrt());
        let comps = contact_components(b, &k, 1e-9);
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.is_point()));
        let mb = validate_maximal(b, &k, 1e-9).unwrap();
        assert!(mb.supports_gap());
        assert_eq!(mb.contact_point_count(), 4);
    }

    #[test]
    fn invalid_ball_rejected() {
        let k = unit_square();
        // A disk overlapping the square.
        let b = GeneralizedBall::disk(Point::new(1.5, 0.0), 1.0);
        assert!(matches!(
            validate_maximal(b, &k, 1e-9),
            Err(KpError::NotMaximal)
        ));
    }

    #[test]
    fn two_contact_circumscribing_circle_through_corner_pair() {
        let k = unit_square();
        // Exterior ball bounded by a circle through 1±i that circumscribes
        // the square (center on the real axis on the far side).
        let c = Point::new(-5.0, 0.0);
        let r = c.dist(Point::new(1.0, 1.0));
        let b = GeneralizedBall::exterior_disk(c, r);
        let mb = validate_maximal(b, &k, 1e-9).unwrap();
        assert_eq!(mb.contacts.len(), 2);
        assert!(!mb.supports_gap());

        // A disk through the same pair centered right of the square always
        // swallows square points: never maximal.
        let c = Point::new(1.5, 0.0);
        let b = GeneralizedBall::disk(c, c.dist(Point::new(1.0, 1.0)));
        assert!(matches!(validate_maximal(b, &k, 1e-9), Err(KpError::NotMaximal)));
    }
}
