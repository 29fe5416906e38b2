use super::{index, make_junction, IndexVarError, Junction, RayKind};
use crate::geom::{Point, PolyCurve, Rect, EPS_FIX, EPS_GEOM};
use crate::map::PlaneMap;
use serde::Serialize;

/// A closed curve partitioned into counterclockwise arcs by cut points given
/// as arc-length fractions.
#[derive(Debug, Clone)]
pub struct ArcPartition {
    pub curve: PolyCurve,
    /// Strictly increasing fractions in [0, 1); arc `i` runs from `cuts[i]`
    /// to `cuts[i+1]` (wrapping).
    pub cuts: Vec<f64>,
}

impl ArcPartition {
    pub fn new(curve: PolyCurve, mut cuts: Vec<f64>) -> Result<Self, IndexVarError> {
        assert!(curve.is_closed());
        if cuts.len() < 2 {
            return Err(IndexVarError::InvalidJunction(
                "a partition needs at least two cut points".into(),
            ));
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in cuts.windows(2) {
            if w[1] - w[0] < 1e-9 {
                return Err(IndexVarError::InvalidJunction(
                    "cut points must be distinct".into(),
                ));
            }
        }
        if cuts[0] < 0.0 || *cuts.last().unwrap() >= 1.0 {
            return Err(IndexVarError::InvalidJunction(
                "cut fractions must lie in [0, 1)".into(),
            ));
        }
        Ok(ArcPartition { curve, cuts })
    }

    pub fn arc_count(&self) -> usize {
        self.cuts.len()
    }

    /// Endpoints (fractions) of arc `i`, the end wrapping past 1.
    pub fn arc(&self, i: usize) -> (f64, f64) {
        let a = self.cuts[i];
        let b = if i + 1 < self.cuts.len() {
            self.cuts[i + 1]
        } else {
            self.cuts[0] + 1.0
        };
        (a, b)
    }
}

/// Outcome of [`variation_total`].
#[derive(Debug, Clone, Serialize)]
pub struct VariationReport {
    pub per_arc: Vec<i32>,
    pub total: i32,
    pub index: i32,
    pub identity_holds: bool,
}

#[derive(Debug, Clone, Copy)]
struct CrossingEvent {
    t: f64,
    ray: RayKind,
}

/// Variation of `f` on the arc `[a, b]` of `s` with respect to the junction
/// `j`: the preimage of the junction along the arc is computed by sampling
/// with bisection refinement, and consecutive pairs passing from the plus ray
/// to the mid ray count +1, from mid to plus -1. Tangential touches (no side
/// change) are discarded.
pub fn variation_arc(
    s: &PolyCurve,
    arc: (f64, f64),
    f: &PlaneMap,
    j: &Junction,
) -> Result<i32, IndexVarError> {
    variation_arc_indexed(s, arc, f, j, 0)
}

fn variation_arc_indexed(
    s: &PolyCurve,
    (a, b): (f64, f64),
    f: &PlaneMap,
    j: &Junction,
    arc_id: usize,
) -> Result<i32, IndexVarError> {
    assert!(b > a);
    let at = |t: f64| s.point_at(t.rem_euclid(1.0));
    let fa = f.eval(at(a));
    let fb = f.eval(at(b));
    if !s.encloses(fa) || !s.encloses(fb) {
        return Err(IndexVarError::EndpointEscapes { arc: arc_id });
    }

    // Sample the arc densely enough that the image polyline cannot skip a
    // ray: image steps are refined below the junction's inner width.
    let samples = sample_arc(s, (a, b), f, arc_id)?;

    // Arc geometry for the moved-off test.
    let events = collect_events(&samples, f, s, j)?;

    let mut var = 0i32;
    for w in events.windows(2) {
        match (w[0].ray, w[1].ray) {
            (RayKind::Plus, RayKind::Mid) => var += 1,
            (RayKind::Mid, RayKind::Plus) => var -= 1,
            _ => {}
        }
    }
    Ok(var)
}

/// Sampled (t, z, f(z)) triples along the arc, refined so consecutive image
/// points are close, plus the moved-off-itself precondition check.
fn sample_arc(
    s: &PolyCurve,
    (a, b): (f64, f64),
    f: &PlaneMap,
    arc_id: usize,
) -> Result<Vec<(f64, Point, Point)>, IndexVarError> {
    let at = |t: f64| s.point_at(t.rem_euclid(1.0));
    let n0 = 256usize;
    let mut pts: Vec<(f64, Point, Point)> = (0..=n0)
        .map(|k| {
            let t = a + (b - a) * k as f64 / n0 as f64;
            let z = at(t);
            (t, z, f.eval(z))
        })
        .collect();

    // Refine until image steps are small relative to the arc scale.
    let scale = s.bounding_box().diameter();
    let max_img_step = scale / 256.0;
    let mut rounds = 0;
    loop {
        let mut refined = Vec::with_capacity(pts.len() * 2);
        let mut any = false;
        for i in 0..pts.len() - 1 {
            refined.push(pts[i]);
            let (t0, _, w0) = pts[i];
            let (t1, _, w1) = pts[i + 1];
            if w0.dist(w1) > max_img_step && t1 - t0 > 1e-10 {
                let tm = 0.5 * (t0 + t1);
                let zm = at(tm);
                refined.push((tm, zm, f.eval(zm)));
                any = true;
            }
        }
        refined.push(*pts.last().unwrap());
        pts = refined;
        rounds += 1;
        if !any || rounds > 12 {
            break;
        }
        if pts.len() > 1 << 17 {
            return Err(IndexVarError::InsufficientSamples(format!(
                "arc {arc_id}: image refinement exceeded the sample budget"
            )));
        }
    }

    // Moved-off test: the image must stay clear of the arc itself.
    let arc_geom: Vec<Point> = pts.iter().map(|&(_, z, _)| z).collect();
    for &(_, _, w) in &pts {
        let d = arc_geom
            .windows(2)
            .map(|seg| crate::geom::segment_distance(w, seg[0], seg[1]))
            .fold(f64::INFINITY, f64::min);
        if d <= EPS_FIX {
            return Err(IndexVarError::ArcNotMovedOff { arc: arc_id });
        }
    }
    Ok(pts)
}

fn collect_events(
    samples: &[(f64, Point, Point)],
    f: &PlaneMap,
    s: &PolyCurve,
    j: &Junction,
) -> Result<Vec<CrossingEvent>, IndexVarError> {
    // Extend rays far enough to cover the image.
    let img_pts: Vec<Point> = samples.iter().map(|&(_, _, w)| w).collect();
    let mut bounds = Rect::from_points(&img_pts).unwrap();
    bounds = bounds.union(&s.bounding_box());
    let at = |t: f64| s.point_at(t.rem_euclid(1.0));

    let mut events: Vec<CrossingEvent> = Vec::new();
    for (kind, ray) in j.rays() {
        for (ra, rb) in ray.segments_covering(&bounds) {
            let dir = rb - ra;
            let side = |w: Point| dir.cross(w - ra);
            for i in 0..samples.len() - 1 {
                let (t0, _, w0) = samples[i];
                let (t1, _, w1) = samples[i + 1];
                if crate::geom::segment_intersection(w0, w1, ra, rb).is_none() {
                    continue;
                }
                let s0 = side(w0);
                let s1 = side(w1);
                if s0 == 0.0 && s1 == 0.0 {
                    continue; // sliding along the ray line: tangential
                }
                // Bisection refinement of the crossing parameter.
                let (mut lo, mut hi) = (t0, t1);
                let (mut slo, _shi) = (s0, s1);
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    let sm = side(f.eval(at(mid)));
                    if (sm >= 0.0) == (slo >= 0.0) {
                        lo = mid;
                        slo = sm;
                    } else {
                        hi = mid;
                    }
                }
                let t_star = 0.5 * (lo + hi);
                let w_star = f.eval(at(t_star));
                // The crossing must land within this ray segment's extent.
                let u = (w_star - ra).dot(dir) / dir.norm_sq();
                if !(-1e-9..=1.0 + 1e-9).contains(&u) {
                    continue;
                }
                // Tangential touches do not change side: sample just before
                // and after.
                let h = (t1 - t0).max(1e-12);
                let before = side(f.eval(at(t_star - h * 1e-3)));
                let after = side(f.eval(at(t_star + h * 1e-3)));
                if before == 0.0 || after == 0.0 || (before > 0.0) == (after > 0.0) {
                    continue;
                }
                events.push(CrossingEvent { t: t_star, ray: kind });
            }
        }
    }
    events.sort_by(|a, b| a.t.partial_cmp(&b.t).unwrap());
    // Merge duplicate detections of one crossing (adjacent sample pairs can
    // both see it after refinement).
    events.dedup_by(|a, b| (a.t - b.t).abs() < 1e-9 && a.ray == b.ray);
    Ok(events)
}

/// Variation of `f` over every arc of the partition, with one junction per
/// arc built automatically, plus the index of `f` on the curve and the
/// index = variation + 1 verdict.
pub fn variation_total(
    partition: &ArcPartition,
    f: &PlaneMap,
) -> Result<VariationReport, IndexVarError> {
    let s = &partition.curve;
    let mut per_arc = Vec::with_capacity(partition.arc_count());
    for i in 0..partition.arc_count() {
        let (a, b) = partition.arc(i);
        let j = junction_for_arc(s, (a, b))?;
        per_arc.push(variation_arc_indexed(s, (a, b), f, &j, i)?);
    }
    let total: i32 = per_arc.iter().sum();
    let index = index(s, f)?;
    Ok(VariationReport {
        per_arc,
        total,
        index,
        identity_holds: index == total + 1,
    })
}

/// A junction based at the midpoint of the arc (falling back to other
/// interior points if the midpoint has no escape route).
pub fn junction_for_arc(s: &PolyCurve, (a, b): (f64, f64)) -> Result<Junction, IndexVarError> {
    let mut last_err = IndexVarError::NoEscapePath;
    for frac in [0.5, 0.35, 0.65, 0.2, 0.8] {
        let v = s.point_at((a + (b - a) * frac).rem_euclid(1.0));
        match make_junction(v, None, s) {
            Ok(j) => return Ok(j),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// Point-in-hull test for the topological hull of a closed curve.
pub fn in_hull(s: &PolyCurve, p: Point) -> bool {
    s.encloses(p) || s.distance_to(p) <= EPS_GEOM
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn circle(n: usize) -> PolyCurve {
        PolyCurve::regular_polygon(Point::ZERO, 1.0, n)
    }

    #[test]
    fn contraction_has_zero_variation_per_arc() {
        let s = circle(128);
        let f = PlaneMap::linear(Complex64::new(-0.5, 0.0), Complex64::new(0.0, 0.0));
        let partition =
            ArcPartition::new(s.clone(), vec![0.0, 0.25, 0.5, 0.75]).unwrap();
        let report = variation_total(&partition, &f).unwrap();
        assert_eq!(report.per_arc, vec![0, 0, 0, 0]);
        assert_eq!(report.total, 0);
        assert_eq!(report.index, 1);
        assert!(report.identity_holds);
    }

    #[test]
    fn refinement_preserves_total() {
        let s = circle(128);
        let f = PlaneMap::linear(Complex64::new(-0.5, 0.0), Complex64::new(0.0, 0.0));
        let coarse = ArcPartition::new(s.clone(), vec![0.0, 0.5]).unwrap();
        let fine = ArcPartition::new(
            s.clone(),
            vec![0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875],
        )
        .unwrap();
        let r1 = variation_total(&coarse, &f).unwrap();
        let r2 = variation_total(&fine, &f).unwrap();
        assert_eq!(r1.total, r2.total);
    }

    #[test]
    fn doubling_map_has_no_admissible_partition() {
        // The canonical error fixture: z -> 2z on the unit circle. Every
        // endpoint maps outside the hull, so no partition is admissible.
        let s = circle(128);
        let f = PlaneMap::linear(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0));
        let partition = ArcPartition::new(s.clone(), vec![0.0, 0.25, 0.5, 0.75]).unwrap();
        match variation_total(&partition, &f) {
            Err(IndexVarError::EndpointEscapes { .. }) => {}
            other => panic!("expected EndpointEscapes, got {other:?}"),
        }
    }

    #[test]
    fn arc_meeting_its_image_rejected() {
        // The identity along the curve keeps every arc on top of its image.
        let s = circle(128);
        let f = PlaneMap::CurveSampled(vec![crate::map::CurveMap::new(
            s.clone(),
            s.vertices().to_vec(),
        )]);
        let partition = ArcPartition::new(s.clone(), vec![0.0, 0.25, 0.5, 0.75]).unwrap();
        match variation_total(&partition, &f) {
            Err(IndexVarError::ArcNotMovedOff { .. }) => {}
            other => panic!("expected ArcNotMovedOff, got {other:?}"),
        }
    }
}
