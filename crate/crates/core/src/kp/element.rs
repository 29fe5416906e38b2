use super::{ContactComponent, KpError, MaximalBall};
use crate::geom::{Chord, GeneralizedBall, Point, PolyContinuum, PolyCurve};

/// Chord style: hyperbolic geodesics (default) or Bell's Euclidean straight
/// chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HullStyle {
    #[default]
    Hyperbolic,
    Euclidean,
}

/// One element of the Kulkarni-Pinkall partition: the hull of a maximal
/// ball's contact set, bounded by the contact components and the chords that
/// cut across the free boundary arcs.
#[derive(Debug, Clone)]
pub struct KPElement {
    pub ball: MaximalBall,
    pub chords: Vec<KPChord>,
    pub is_gap: bool,
}

/// A hull-boundary chord plus the data needed for side tests: the sign of
/// the free boundary arc it cuts off.
#[derive(Debug, Clone)]
pub struct KPChord {
    pub chord: Chord,
    free_side_sign: f64,
}

impl KPChord {
    /// Whether `p` is on the hull side of (or on) this chord.
    pub fn hull_side(&self, p: Point, eps: f64) -> bool {
        if self.chord.distance_to(p) <= eps {
            return true;
        }
        let s = self.chord.carrier_side(p);
        (s > 0.0) != (self.free_side_sign > 0.0)
    }

    pub fn polyline(&self, n: usize) -> Option<PolyCurve> {
        self.chord.polyline(n).ok()
    }
}

/// Build the partition element of a maximal ball: chords join the end of
/// each contact component to the start of the next (in boundary order).
pub fn kp_element(mb: &MaximalBall, style: HullStyle) -> Result<KPElement, KpError> {
    let comps = &mb.contacts;
    if comps.is_empty() || mb.contact_point_count() < 2 {
        return Err(KpError::NotMaximal);
    }
    let is_gap = mb.supports_gap();
    let two_point_pair =
        comps.len() == 2 && comps[0].is_point() && comps[1].is_point();

    let mut chords = Vec::new();
    let n = comps.len();
    for i in 0..n {
        // Two point-contacts support a single geodesic; the second wrap
        // chord would duplicate it.
        if two_point_pair && i == 1 {
            break;
        }
        let from = comps[i];
        let to = comps[(i + 1) % n];
        let a = from.end;
        let b = to.start;
        if a.close(b, 1e-9) {
            continue;
        }
        let chord = make_chord(mb.ball, a, b, style)?;
        let free_ref = free_arc_reference(mb.ball, &from, &to, i + 1 == n);
        let mut sign = chord.carrier_side(free_ref);
        if sign == 0.0 {
            sign = 1.0;
        }
        chords.push(KPChord {
            chord,
            free_side_sign: sign,
        });
    }
    Ok(KPElement {
        ball: mb.clone(),
        chords,
        is_gap,
    })
}

fn make_chord(
    ball: GeneralizedBall,
    a: Point,
    b: Point,
    style: HullStyle,
) -> Result<Chord, KpError> {
    let chord = match style {
        HullStyle::Hyperbolic => Chord::geodesic(ball, a, b)?,
        HullStyle::Euclidean => Chord {
            ball,
            a,
            b,
            carrier: crate::geom::ChordCarrier::Segment,
        },
    };
    Ok(chord)
}

/// A point of the free boundary arc between two consecutive contact
/// components; it lies outside the hull, so it orients the chord side test.
fn free_arc_reference(
    ball: GeneralizedBall,
    from: &ContactComponent,
    to: &ContactComponent,
    wraps: bool,
) -> Point {
    if ball.cyclic_boundary() {
        let t0 = from.end_param;
        let mut t1 = to.start_param;
        if t1 <= t0 + 1e-15 {
            t1 += 1.0;
        }
        ball.boundary_point(0.5 * (t0 + t1))
    } else if wraps {
        // The free stretch runs through infinity; any far parameter works.
        let span = (to.end_param - from.start_param).abs() + 1.0;
        ball.boundary_point(from.end_param + 10.0 * span)
    } else {
        ball.boundary_point(0.5 * (from.end_param + to.start_param))
    }
}

impl KPElement {
    /// Membership of `p` in the (closed) hull: inside the ball and on the
    /// hull side of every chord. Points within `eps` of a chord count as
    /// members.
    pub fn contains(&self, p: Point) -> bool {
        self.contains_with(p, 1e-9)
    }

    pub fn contains_with(&self, p: Point, eps: f64) -> bool {
        if !self.is_gap {
            // The hull of a two-contact ball is the chord itself.
            return self
                .chords
                .first()
                .map_or(false, |c| c.chord.distance_to(p) <= eps.max(1e-7));
        }
        if self.ball.ball.signed_boundary_distance(p) > eps {
            return false;
        }
        self.chords.iter().all(|c| c.hull_side(p, eps))
    }

    /// Strict interior membership for gap elements: inside and at least
    /// `margin` away from every chord and from the continuum contacts.
    pub fn interior_contains(&self, p: Point, margin: f64) -> bool {
        if !self.is_gap {
            return false;
        }
        if self.ball.ball.signed_boundary_distance(p) > -margin {
            return false;
        }
        self.chords
            .iter()
            .all(|c| c.hull_side(p, 0.0) && c.chord.distance_to(p) >= margin)
    }
}

/// Contact components + element for a candidate ball against `k`.
pub fn element_of(
    ball: GeneralizedBall,
    k: &PolyContinuum,
    tol: f64,
    style: HullStyle,
) -> Result<KPElement, KpError> {
    let mb = super::contacts::validate_maximal(ball, k, tol)?;
    kp_element(&mb, style)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ChordCarrier;

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
    fn top_half_plane_hull_is_the_semi_disk() {
        let k = unit_square();
        let ball = GeneralizedBall::half_plane(Point::new(0.0, 1.0), Point::new(0.0, 1.0));
        let el = element_of(ball, &k, 1e-9, HullStyle::Hyperbolic).unwrap();
        assert!(el.is_gap);
        assert_eq!(el.chords.len(), 1);
        // The chord is the semicircle |z - i| = 1 above Im z = 1.
        match el.chords[0].chord.carrier {
            ChordCarrier::Arc { center, radius, .. } => {
                assert!(center.close(Point::new(0.0, 1.0), 1e-9));
                assert!((radius - 1.0).abs() < 1e-9);
            }
            ref other => panic!("expected arc, got {other:?}"),
        }
        // Membership: the semi-disk {|z - i| <= 1, Im z >= 1}.
        assert!(el.contains(Point::new(0.0, 1.5)));
        assert!(el.contains(Point::new(0.0, 2.0)));
        assert!(!el.contains(Point::new(0.0, 2.1)));
        assert!(!el.contains(Point::new(0.9, 1.9)));
        assert!(!el.contains(Point::new(0.0, 0.5)));
    }

    #[test]
    fn exterior_ball_hull_has_four_chords_centered_at_poles() {
        let k = unit_square();
        let ball = GeneralizedBall::exterior_disk(Point::ZERO, 2.0f64.sqrt());
        let el = element_of(ball, &k, 1e-9, HullStyle::Hyperbolic).unwrap();
        assert!(el.is_gap);
        assert_eq!(el.chords.len(), 4);
        // Chord carriers are circles of radius sqrt(2) centered at ±2, ±2i.
        let mut centers: Vec<Point> = el
            .chords
            .iter()
            .map(|c| match c.chord.carrier {
                ChordCarrier::Arc { center, radius, .. } => {
                    assert!((radius - 2.0f64.sqrt()).abs() < 1e-9);
                    center
                }
                ref other => panic!("expected arc, got {other:?}"),
            })
            .collect();
        centers.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
        let expect = [
            Point::new(-2.0, 0.0),
            Point::new(0.0, -2.0),
            Point::new(0.0, 2.0),
            Point::new(2.0, 0.0),
        ];
        for (c, e) in centers.iter().zip(expect) {
            assert!(c.close(e, 1e-9), "center {c} vs {e}");
        }
        // The unbounded hull contains far diagonal points but not points
        // near the edge midlines.
        assert!(el.contains(Point::new(2.0, 2.0)));
        assert!(el.contains(Point::new(-3.0, -3.0)));
        assert!(!el.contains(Point::new(2.0, 0.0)));
        assert!(!el.contains(Point::new(0.0, 1.5)));
    }

    #[test]
    fn two_contact_ball_single_chord() {
        let k = unit_square();
        let c = Point::new(-5.0, 0.0);
        let ball = GeneralizedBall::exterior_disk(c, c.dist(Point::new(1.0, 1.0)));
        let el = element_of(ball, &k, 1e-9, HullStyle::Hyperbolic).unwrap();
        assert!(!el.is_gap);
        assert_eq!(el.chords.len(), 1);
        // Membership is membership of the chord itself.
        let mid = el.chords[0].chord.point_at(0.5).unwrap();
        assert!(el.contains(mid));
        assert!(!el.contains(c));
    }
}
