use super::variation::{in_hull, junction_for_arc};
use super::{index, make_junction, variation_arc, ArcPartition, IndexVarError};
use crate::geom::{segment_intersection, Point, PolyCurve, EPS_FIX};
use crate::map::PlaneMap;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LollipopBranch {
    /// `f(a_{n+1})` fell in the region bounded by the first arc run and `I`.
    Right,
    /// `f(a_{n+1})` fell in the complementary region.
    Left,
}

#[derive(Debug, Clone, Serialize)]
pub struct LollipopReport {
    pub branch: LollipopBranch,
    pub variation_sum: i32,
    pub boundary_index: i32,
    pub identity_holds: bool,
}

/// Check the lollipop identity: with `S` partitioned at `partition.cuts`,
/// `I` an arc inside the hull joining cut `0` to cut `special` (the spec's
/// `a_{n+1}`), and all hypotheses machine-checked, the variation sum over the
/// arcs of the region containing `f(a_special)` plus one equals the index of
/// `f` along that region's boundary.
pub fn lollipop_check(
    partition: &ArcPartition,
    special: usize,
    i_arc: &PolyCurve,
    f: &PlaneMap,
) -> Result<LollipopReport, IndexVarError> {
    let s = &partition.curve;
    let cuts = &partition.cuts;
    if special == 0 || special >= cuts.len() {
        return Err(IndexVarError::HypothesisFailed(
            "special cut index must be interior to the partition".into(),
        ));
    }

    // I meets S only at its endpoints, which are the cuts 0 and `special`.
    let a0 = s.point_at(cuts[0]);
    let a_sp = s.point_at(cuts[special]);
    let iv = i_arc.vertices();
    if !(iv[0].close(a0, 1e-7) && iv[iv.len() - 1].close(a_sp, 1e-7)) {
        return Err(IndexVarError::HypothesisFailed(
            "I must join cut 0 to the special cut".into(),
        ));
    }
    for (k, (a, b)) in i_arc.segments().enumerate() {
        for (c, d) in s.segments() {
            if let Some(x) = segment_intersection(a, b, c, d) {
                let at_end = (k == 0 && x.close(a0, 1e-6))
                    || (k == i_arc.segment_count() - 1 && x.close(a_sp, 1e-6));
                if !at_end {
                    return Err(IndexVarError::HypothesisFailed(format!(
                        "I meets S at {x} away from its endpoints"
                    )));
                }
            }
        }
    }
    for p in iv[1..iv.len() - 1].iter() {
        if !s.encloses(*p) {
            return Err(IndexVarError::HypothesisFailed(
                "I leaves the topological hull of S".into(),
            ));
        }
    }

    // A junction at a_0 in the complement of T(S).
    let j0 = make_junction(a0, None, s)?;

    // f(I) avoids I and the junction.
    let img_i: Vec<Point> = (0..=128)
        .map(|k| f.eval(i_arc.point_at(k as f64 / 128.0)))
        .collect();
    for w in &img_i {
        if i_arc.distance_to(*w) <= EPS_FIX {
            return Err(IndexVarError::HypothesisFailed(
                "f(I) meets I".into(),
            ));
        }
        let jb = s.bounding_box().scaled(4.0);
        for (_, ray) in j0.rays() {
            for (ra, rb) in ray.segments_covering(&jb) {
                if crate::geom::segment_distance(*w, ra, rb) <= EPS_FIX {
                    return Err(IndexVarError::HypothesisFailed(
                        "f(I) meets the junction at a_0".into(),
                    ));
                }
            }
        }
    }

    // Arc admissibility for every arc of the partition.
    for i in 0..partition.arc_count() {
        let (a, b) = partition.arc(i);
        let fa = f.eval(s.point_at(a.rem_euclid(1.0)));
        if !in_hull(s, fa) {
            return Err(IndexVarError::HypothesisFailed(format!(
                "f(cut {i}) leaves the hull"
            )));
        }
        let _ = b;
    }

    // The two regions: R bounded by arcs 0..special plus I, L by the rest.
    let right_curve = region_boundary(s, cuts, 0, special, i_arc);
    let left_curve = region_boundary(s, cuts, special, cuts.len(), i_arc);

    let f_sp = f.eval(a_sp);
    let in_right = right_curve.encloses(f_sp);
    let in_left = left_curve.encloses(f_sp);
    if in_right == in_left {
        return Err(IndexVarError::HypothesisFailed(format!(
            "f(a_special) = {f_sp} is not strictly inside one region"
        )));
    }

    let (branch, arc_range, boundary) = if in_right {
        (LollipopBranch::Right, 0..special, right_curve)
    } else {
        (LollipopBranch::Left, special..cuts.len(), left_curve)
    };

    let mut variation_sum = 0i32;
    for i in arc_range {
        let (a, b) = partition.arc(i);
        let j = junction_for_arc(s, (a, b))?;
        variation_sum += variation_arc(s, (a, b), f, &j)?;
    }
    let boundary_index = index(&boundary, f)?;
    Ok(LollipopReport {
        branch,
        variation_sum,
        boundary_index,
        identity_holds: boundary_index == variation_sum + 1,
    })
}

/// Closed boundary of the region cut off by `I`: the arcs of `s` from cut
/// `from` to cut `to` followed by `I` traversed back, oriented
/// counterclockwise.
fn region_boundary(s: &PolyCurve, cuts: &[f64], from: usize, to: usize, i_arc: &PolyCurve) -> PolyCurve {
    let t0 = cuts[from];
    let t1 = if to < cuts.len() { cuts[to] } else { cuts[0] + 1.0 };
    // Walk the curve from t0 to t1.
    let mut pts: Vec<Point> = Vec::new();
    let steps = (s.len() * 2).max(64);
    for k in 0..=steps {
        let t = t0 + (t1 - t0) * k as f64 / steps as f64;
        pts.push(s.point_at(t.rem_euclid(1.0)));
    }
    // Then I from its far end back to the start. I runs cut0 -> special.
    let iv: Vec<Point> = i_arc.vertices().to_vec();
    let back: Vec<Point> = if from == 0 {
        iv.iter().rev().cloned().collect()
    } else {
        iv.clone()
    };
    pts.extend_from_slice(&back[1..back.len().saturating_sub(1)]);
    let mut dedup: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts {
        if dedup.last().map_or(true, |&q| !p.close(q, 1e-12)) {
            dedup.push(p);
        }
    }
    while dedup.len() > 2 && dedup.last().unwrap().close(dedup[0], 1e-12) {
        dedup.pop();
    }
    let mut curve = PolyCurve::closed_path(dedup).expect("region boundary is a closed path");
    if curve.signed_area2() < 0.0 {
        curve = curve.reversed();
    }
    curve
}
