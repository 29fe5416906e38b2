use super::contacts::interior_empty;
use super::element::{element_of, HullStyle, KPElement};
use super::{kp_locate, maximal_balls, KpError};
use crate::geom::{Chord, GeneralizedBall, Point, PolyContinuum};
use serde::Serialize;

/// Classification of the union of all chords joining two boundary points.
#[derive(Debug)]
pub enum ChordsBetween {
    Empty,
    Single(Chord),
    /// The chords fill a disk bounded by the two extreme chords.
    Disk { first: Chord, second: Chord },
}

/// Classify `C(a, b)`: sweep the one-parameter family of balls whose
/// boundary passes through `a` and `b` (disks, exterior disks, and the two
/// half-planes of the line), keep the parameters where the ball interior
/// misses `k`, and report none, one, or the two extremes.
pub fn chords_between(
    a: Point,
    b: Point,
    k: &PolyContinuum,
    budget: usize,
) -> Result<ChordsBetween, KpError> {
    if a.close(b, 1e-12) {
        return Err(KpError::DegenerateRegion("chord endpoints coincide".into()));
    }
    let scale = k.bounding_box().diameter().max(a.dist(b));
    let tol = 1e-9 * (1.0 + scale);
    let m = (a + b) * 0.5;
    let n = (b - a).normalize().perp();
    let half = a.dist(b) * 0.5;

    // Unified cyclic parameter u in [0, 2): (0,1) disks with t = tan(..),
    // 1 the far half-plane, (1,2) exterior disks, 0 the near half-plane.
    let ball_at = |u: f64| -> GeneralizedBall {
        let u = u.rem_euclid(2.0);
        if u.abs() < 1e-12 || (u - 2.0).abs() < 1e-12 {
            GeneralizedBall::half_plane(a, n * -1.0)
        } else if (u - 1.0).abs() < 1e-12 {
            GeneralizedBall::half_plane(a, n)
        } else if u < 1.0 {
            let t = ((u - 0.5) * std::f64::consts::PI).tan() * scale;
            let c = m + n * t;
            GeneralizedBall::disk(c, (t * t + half * half).sqrt())
        } else {
            let t = ((u - 1.5) * std::f64::consts::PI).tan() * scale;
            let c = m + n * t;
            GeneralizedBall::exterior_disk(c, (t * t + half * half).sqrt())
        }
    };
    // A parameter is admissible when the ball interior misses K and the two
    // endpoints are consecutive contacts, so the geodesic between them is a
    // hull chord (a ball may touch K elsewhere, in which case the chord
    // joining a and b cuts through the hull rather than bounding it).
    let ok = |u: f64| -> bool {
        let ball = ball_at(u);
        if !interior_empty(ball, k, tol) {
            return false;
        }
        let comps = super::contacts::contact_components(ball, k, 1e-7 * (1.0 + scale));
        let nc = comps.len();
        if nc == 0 {
            return false;
        }
        let eps = 1e-6 * (1.0 + scale);
        (0..nc).any(|i| {
            let u = comps[i].end;
            let v = comps[(i + 1) % nc].start;
            (u.close(a, eps) && v.close(b, eps)) || (u.close(b, eps) && v.close(a, eps))
        })
    };

    let grid = (budget.max(8)) * 8;
    let flags: Vec<bool> = (0..grid).map(|i| ok(2.0 * i as f64 / grid as f64)).collect();
    let count_ok = flags.iter().filter(|&&f| f).count();
    if count_ok == 0 {
        return Ok(ChordsBetween::Empty);
    }
    if count_ok == grid {
        // Every ball through a, b is valid; degenerate continuum {a, b}.
        return Ok(ChordsBetween::Disk {
            first: Chord::geodesic(ball_at(0.0), a, b)?,
            second: Chord::geodesic(ball_at(1.0), a, b)?,
        });
    }

    // The valid set is one cyclic run (chord unions are connected); find its
    // extremes by scanning run boundaries and refining.
    let mut start = None;
    for i in 0..grid {
        let prev = flags[(i + grid - 1) % grid];
        if flags[i] && !prev {
            start = Some(i);
            break;
        }
    }
    let start = start.expect("mixed flags have a run start");
    let mut end = start;
    while flags[(end + 1) % grid] {
        end = (end + 1) % grid;
    }
    let u_of = |i: usize| 2.0 * i as f64 / grid as f64;
    let refine = |bad: f64, good: f64| -> f64 {
        let (mut bad, mut good) = (bad, good);
        for _ in 0..50 {
            let mid = 0.5 * (bad + good);
            if ok(mid.rem_euclid(2.0)) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good.rem_euclid(2.0)
    };
    let lo = refine(u_of(start) - 2.0 / grid as f64, u_of(start));
    let hi = refine(u_of(end) + 2.0 / grid as f64, u_of(end));

    let span = (hi - lo).rem_euclid(2.0);
    let first = Chord::geodesic(ball_at(lo), a, b)?;
    if span * scale < 1e-7 {
        return Ok(ChordsBetween::Single(first));
    }
    let second = Chord::geodesic(ball_at(hi), a, b)?;
    Ok(ChordsBetween::Disk { first, second })
}

#[derive(Debug, Serialize)]
pub struct PartitionReport {
    pub samples: usize,
    pub located: usize,
    pub gap_hits: usize,
    pub chord_hits: usize,
    pub disagreements: Vec<String>,
}

impl PartitionReport {
    pub fn clean(&self) -> bool {
        self.located == self.samples && self.disagreements.is_empty()
    }
}

/// Validate the partition at sample points: every sample must be located by
/// the inversion construction in an element containing it, and the result
/// must agree with brute force over the enumerated maximal balls (a sample
/// interior to an enumerated gap must locate to that gap; a sample in no
/// enumerated gap must locate to a two-contact chord through it or to an
/// unenumerated gap containing it).
pub fn partition_check(
    k: &PolyContinuum,
    samples: &[Point],
    budget: usize,
) -> Result<PartitionReport, KpError> {
    let balls = maximal_balls(k, budget)?;
    let scale = k.bounding_box().diameter().max(1.0);
    let gaps: Vec<KPElement> = balls
        .iter()
        .filter(|b| b.supports_gap())
        .filter_map(|b| element_of(b.ball, k, 1e-6 * scale, HullStyle::Hyperbolic).ok())
        .collect();
    let margin = 1e-7 * scale;

    let mut report = PartitionReport {
        samples: samples.len(),
        located: 0,
        gap_hits: 0,
        chord_hits: 0,
        disagreements: Vec::new(),
    };
    for &p in samples {
        let el = match kp_locate(p, k) {
            Ok(el) => el,
            Err(e) => {
                report.disagreements.push(format!("{p}: locate failed: {e}"));
                continue;
            }
        };
        if !el.contains_with(p, 1e-6 * scale) {
            report
                .disagreements
                .push(format!("{p}: located element does not contain the point"));
            continue;
        }
        report.located += 1;

        // Exactly-one-hull membership against the enumerated gaps.
        let strict_hits: Vec<usize> = gaps
            .iter()
            .enumerate()
            .filter(|(_, g)| g.interior_contains(p, margin))
            .map(|(i, _)| i)
            .collect();
        if strict_hits.len() > 1 {
            report
                .disagreements
                .push(format!("{p}: inside {} distinct gap hulls", strict_hits.len()));
            continue;
        }
        if let Some(&gi) = strict_hits.first() {
            report.gap_hits += 1;
            if !same_ball_loose(gaps[gi].ball.ball, el.ball.ball, 1e-5 * scale) {
                report.disagreements.push(format!(
                    "{p}: located {:?} but brute force says {:?}",
                    el.ball.ball, gaps[gi].ball.ball
                ));
            }
        } else {
            // Not in any enumerated gap: the located element must be a
            // two-contact chord through the point, or a gap that the finite
            // enumeration missed but which genuinely contains it.
            if el.is_gap {
                if !el.contains_with(p, 1e-6 * scale) {
                    report
                        .disagreements
                        .push(format!("{p}: gap element misses the point"));
                }
            } else {
                report.chord_hits += 1;
                let on_chord = el
                    .chords
                    .first()
                    .map_or(false, |c| c.chord.distance_to(p) <= 1e-5 * scale);
                if !on_chord {
                    report
                        .disagreements
                        .push(format!("{p}: two-contact element's chord misses the point"));
                }
            }
        }
    }
    Ok(report)
}

fn same_ball_loose(a: GeneralizedBall, b: GeneralizedBall, tol: f64) -> bool {
    match (a, b) {
        (
            GeneralizedBall::Disk { center: c1, radius: r1 },
            GeneralizedBall::Disk { center: c2, radius: r2 },
        )
        | (
            GeneralizedBall::ExteriorDisk { center: c1, radius: r1 },
            GeneralizedBall::ExteriorDisk { center: c2, radius: r2 },
        ) => c1.close(c2, tol) && (r1 - r2).abs() <= tol,
        (
            GeneralizedBall::HalfPlane { point: p1, normal: n1 },
            GeneralizedBall::HalfPlane { point: p2, normal: n2 },
        ) => n1.close(n2, 1e-6) && ((p2 - p1).dot(n1)).abs() <= tol,
        _ => false,
    }
}
