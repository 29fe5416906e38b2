//! Randomized admissible configurations with ground-truth variation known by
//! construction.
//!
//! Maps are piecewise-linear interpolations along a refined circle: the image
//! of an arc either stays in a small blob well inside the hull (variation 0)
//! or leaves through a gate opposite the arc and wraps around the whole curve
//! a prescribed number of times before returning (variation = winding count).
//! Because the loops encircle every junction based on the arc, the crossing
//! count equals the prescribed winding for any admissible junction.

use super::ArcPartition;
use crate::geom::{Point, PolyCurve};
use crate::map::{CurveMap, PlaneMap};
use rand::Rng;

/// A generated configuration: the partitioned curve, the map, and the
/// variation each arc was built to have.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub partition: ArcPartition,
    pub map: PlaneMap,
    pub expected_var: Vec<i32>,
}

/// Number of curve vertices given to each arc's image track.
const VERTS_PER_ARC: usize = 96;

pub struct FixtureOptions {
    pub arcs: usize,
    /// Per-arc variation values to draw from.
    pub var_choices: Vec<i32>,
    pub radius: f64,
}

impl Default for FixtureOptions {
    fn default() -> Self {
        FixtureOptions {
            arcs: 4,
            var_choices: vec![0, 0, 1, -1],
            radius: 1.0,
        }
    }
}

/// Build a random admissible fixture. The curve is a circle refined enough to
/// carry the image tracks; cut points land on vertices.
pub fn random_fixture(rng: &mut impl Rng, opts: &FixtureOptions) -> Fixture {
    let arcs = opts.arcs.max(2);
    let n = arcs * VERTS_PER_ARC;
    let curve = PolyCurve::regular_polygon(Point::ZERO, opts.radius, n);
    let cuts: Vec<f64> = (0..arcs).map(|i| i as f64 / arcs as f64).collect();

    let vars: Vec<i32> = (0..arcs)
        .map(|_| opts.var_choices[rng.gen_range(0..opts.var_choices.len())])
        .collect();

    // Anchor points: the shared endpoint images f(a_i), placed well inside.
    let anchors: Vec<Point> = (0..arcs)
        .map(|i| {
            let spread: f64 = rng.gen_range(-0.25..0.25);
            Point::unit(i as f64 / arcs as f64 + spread) * (opts.radius * 0.25)
        })
        .collect();

    let mut images = vec![Point::ZERO; n];
    for arc in 0..arcs {
        let start_v = arc * VERTS_PER_ARC;
        let from = anchors[arc];
        let to = anchors[(arc + 1) % arcs];
        let track = arc_track(
            from,
            to,
            vars[arc],
            (cuts[arc] + 0.5 / arcs as f64 + 0.5).rem_euclid(1.0),
            opts.radius,
            VERTS_PER_ARC + 1,
        );
        for (k, p) in track.iter().take(VERTS_PER_ARC).enumerate() {
            images[start_v + k] = *p;
        }
    }

    let map = PlaneMap::CurveSampled(vec![CurveMap::new(curve.clone(), images)]);
    let partition = ArcPartition::new(curve, cuts).expect("uniform cuts are valid");
    Fixture {
        partition,
        map,
        expected_var: vars,
    }
}

/// Image track for one arc: `count+...` points from `from` to `to`. With
/// `turns == 0` the track is a short chord near the center; otherwise it
/// exits through the gate angle, wraps `|turns|` times around a circle of
/// twice the curve radius (counterclockwise for positive turns), and comes
/// back.
fn arc_track(
    from: Point,
    to: Point,
    turns: i32,
    gate: f64,
    radius: f64,
    count: usize,
) -> Vec<Point> {
    if turns == 0 {
        return (0..count)
            .map(|k| from.lerp(to, k as f64 / (count - 1) as f64))
            .collect();
    }
    let outer = radius * 2.0;
    let gate_in = Point::unit(gate) * (radius * 0.3);
    let gate_out = Point::unit(gate) * outer;
    // Budget the points: lead-in, |turns| loops, lead-out.
    let loop_pts = (count * 3) / 4;
    let lead = (count - loop_pts) / 2;
    let tail = count - loop_pts - lead;
    let mut pts = Vec::with_capacity(count);
    for k in 0..lead {
        let t = k as f64 / lead as f64;
        // from -> gate_in -> gate_out
        let p = if t < 0.5 {
            from.lerp(gate_in, t * 2.0)
        } else {
            gate_in.lerp(gate_out, (t - 0.5) * 2.0)
        };
        pts.push(p);
    }
    let total_sweep = turns as f64; // turns of the full outer circle
    for k in 0..loop_pts {
        let t = k as f64 / loop_pts as f64;
        pts.push(Point::unit(gate + total_sweep * t) * outer);
    }
    for k in 0..tail {
        let t = (k + 1) as f64 / tail as f64;
        let p = if t < 0.5 {
            gate_out.lerp(gate_in, t * 2.0)
        } else {
            gate_in.lerp(to, (t - 0.5) * 2.0)
        };
        pts.push(p);
    }
    pts
}
