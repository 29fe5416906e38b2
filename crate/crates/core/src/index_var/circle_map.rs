use super::{index::lift_turns, IndexVarError};
use crate::geom::Point;

/// Samples of a circle map `g: S^1 -> S^1`: pairs of parameter `t` in [0, 1)
/// and value on the unit circle, sorted by `t`, wrapping around.
#[derive(Debug, Clone)]
pub struct CircleMapSamples {
    samples: Vec<(f64, Point)>,
}

impl CircleMapSamples {
    pub fn new(mut samples: Vec<(f64, Point)>) -> Self {
        assert!(samples.len() >= 8, "need at least 8 samples");
        samples.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for (_, v) in &mut samples {
            *v = v.normalize();
        }
        CircleMapSamples { samples }
    }

    /// Sample the map `t -> g(t)` at `n` uniform parameters.
    pub fn from_fn(g: impl Fn(f64) -> Point, n: usize) -> Self {
        let samples = (0..n.max(8)).map(|k| {
            let t = k as f64 / n.max(8) as f64;
            (t, g(t))
        });
        CircleMapSamples::new(samples.collect())
    }

    pub fn samples(&self) -> &[(f64, Point)] {
        &self.samples
    }
}

/// Degree of a sampled circle map: the increment of a continuous lift over
/// one revolution. Fails with `InsufficientSamples` when adjacent values jump
/// by an angle of pi/2 or more, since the lift is then ambiguous.
pub fn circle_map_degree(g: &CircleMapSamples) -> Result<i32, IndexVarError> {
    let mut total = 0.0f64;
    let n = g.samples.len();
    for i in 0..n {
        let (_, u) = g.samples[i];
        let (_, v) = g.samples[(i + 1) % n];
        let turn = u.cross(v).atan2(u.dot(v));
        if turn.abs() >= std::f64::consts::FRAC_PI_2 {
            return Err(IndexVarError::InsufficientSamples(format!(
                "angular gap {:.3} rad at sample {i}",
                turn.abs()
            )));
        }
        total += turn;
    }
    let turns = total / std::f64::consts::TAU;
    Ok(turns.round() as i32)
}

/// Degree with an evaluator available for adaptive refinement; gaps of pi/2
/// or more are subdivided instead of rejected.
pub fn circle_map_degree_with(
    g: impl Fn(f64) -> Point,
    initial: usize,
) -> Result<i32, IndexVarError> {
    let field = |t: f64| g(t.rem_euclid(1.0));
    let turns = lift_turns(&field, 0.0, 1.0, initial.max(8), 0.0)?;
    Ok(turns.round() as i32)
}
