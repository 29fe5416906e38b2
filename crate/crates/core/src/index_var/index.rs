use super::IndexVarError;
use crate::geom::{Point, PolyCurve, EPS_FIX};
use crate::map::PlaneMap;

/// Adaptive lift of the angle of a nonvanishing vector field along a
/// parameter interval. Subdivides until consecutive directions differ by
/// less than pi/2, then sums exact per-step `atan2` increments. Returns the
/// total in turns.
pub(crate) fn lift_turns(
    field: &dyn Fn(f64) -> Point,
    t0: f64,
    t1: f64,
    initial: usize,
    min_norm: f64,
) -> Result<f64, IndexVarError> {
    const MAX_EVALS: usize = 1 << 20;
    let mut evals = 0usize;
    let mut value = |t: f64| -> Result<Point, IndexVarError> {
        evals += 1;
        if evals > MAX_EVALS {
            return Err(IndexVarError::InsufficientSamples(format!(
                "lift used more than {MAX_EVALS} samples"
            )));
        }
        let v = field(t);
        if v.norm() <= min_norm {
            return Err(IndexVarError::FixedPointOnCurve);
        }
        Ok(v)
    };

    let n = initial.max(2);
    let mut total = 0.0f64;
    // Work segment by segment with an explicit stack of (t, v) pairs.
    let mut prev_t = t0;
    let mut prev_v = value(t0)?;
    for k in 1..=n {
        let t = t0 + (t1 - t0) * (k as f64 / n as f64);
        let v = value(t)?;
        // Stack of segments still to resolve between prev and (t, v).
        let mut stack = vec![(t, v)];
        while let Some((bt, bv)) = stack.pop() {
            let turn = prev_v.cross(bv).atan2(prev_v.dot(bv));
            if turn.abs() < std::f64::consts::FRAC_PI_2 {
                total += turn;
                prev_t = bt;
                prev_v = bv;
            } else {
                if (bt - prev_t).abs() < 1e-13 {
                    return Err(IndexVarError::InsufficientSamples(
                        "direction jump of pi/2 or more across a vanishing parameter step".into(),
                    ));
                }
                let mid = 0.5 * (prev_t + bt);
                let mv = value(mid)?;
                stack.push((bt, bv));
                stack.push((mid, mv));
            }
        }
    }
    Ok(total / std::f64::consts::TAU)
}

/// Index of `f` on the closed curve `S`: the degree of the unit vector
/// `(f(z) - z)/|f(z) - z|` as `z` runs counterclockwise around `S`, i.e. the
/// winding of `z -> f(z) - z` about the origin.
pub fn index(s: &PolyCurve, f: &PlaneMap) -> Result<i32, IndexVarError> {
    index_with(s, f, EPS_FIX)
}

pub fn index_with(s: &PolyCurve, f: &PlaneMap, eps_fix: f64) -> Result<i32, IndexVarError> {
    assert!(s.is_closed(), "index needs a closed curve");
    let field = |t: f64| {
        let z = s.point_at(t.rem_euclid(1.0));
        f.eval(z) - z
    };
    let initial = (s.len() * 4).max(64);
    let turns = lift_turns(&field, 0.0, 1.0, initial, eps_fix)?;
    let rounded = turns.round();
    if (turns - rounded).abs() > 0.1 {
        return Err(IndexVarError::InsufficientSamples(format!(
            "lift closed up with residual {}",
            (turns - rounded).abs()
        )));
    }
    Ok(rounded as i32)
}

/// Fractional index of `f` along the counterclockwise arc of `S` between
/// arc-length fractions `a` and `b`: the lift increment, in turns, which
/// need not be an integer. Additive over complementary arcs.
pub fn fractional_index(
    s: &PolyCurve,
    a: f64,
    b: f64,
    f: &PlaneMap,
) -> Result<f64, IndexVarError> {
    assert!(s.is_closed());
    let (a, mut b) = (a.rem_euclid(1.0), b.rem_euclid(1.0));
    if b <= a {
        b += 1.0;
    }
    let field = |t: f64| {
        let z = s.point_at(t.rem_euclid(1.0));
        f.eval(z) - z
    };
    let span = b - a;
    let initial = ((s.len() as f64 * 4.0 * span) as usize).max(32);
    lift_turns(&field, a, b, initial, EPS_FIX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn circle() -> PolyCurve {
        PolyCurve::regular_polygon(Point::ZERO, 1.0, 128)
    }

    #[test]
    fn constant_map_inside_hull_has_index_one() {
        let f = PlaneMap::constant(Point::new(0.2, 0.1));
        assert_eq!(index(&circle(), &f).unwrap(), 1);
    }

    #[test]
    fn doubling_map_has_index_one() {
        // f(z) = 2z, so f(z) - z = z winds once.
        let f = PlaneMap::linear(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(index(&circle(), &f).unwrap(), 1);
    }

    #[test]
    fn contraction_into_hull_has_index_one() {
        let f = PlaneMap::linear(Complex64::new(-0.5, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(index(&circle(), &f).unwrap(), 1);
    }

    #[test]
    fn squared_displacement_winds_twice() {
        // f(z) = z + z^2 has f(z) - z = z^2.
        let f = PlaneMap::polynomial_real(&[0.0, 1.0, 1.0]);
        assert_eq!(index(&circle(), &f).unwrap(), 2);
    }

    #[test]
    fn fixed_point_on_curve_detected() {
        // f(z) = z^2 fixes 1, which lies on the unit circle.
        let f = PlaneMap::polynomial_real(&[0.0, 0.0, 1.0]);
        match index(&circle(), &f) {
            Err(IndexVarError::FixedPointOnCurve) => {}
            other => panic!("expected FixedPointOnCurve, got {other:?}"),
        }
    }

    #[test]
    fn full_circle_fractional_index_closes_to_index() {
        let f = PlaneMap::linear(Complex64::new(-0.5, 0.0), Complex64::new(0.0, 0.0));
        let v = fractional_index(&circle(), 0.0, 1.0, &f).unwrap();
        assert!((v - 1.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn halves_sum_to_index() {
        let f = PlaneMap::linear(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0));
        let h1 = fractional_index(&circle(), 0.0, 0.5, &f).unwrap();
        let h2 = fractional_index(&circle(), 0.5, 1.0, &f).unwrap();
        assert!((h1 + h2 - 1.0).abs() < 1e-9, "sum {}", h1 + h2);
    }

    /// Analytic oracle: for f(z) = 2z on the unit circle the displacement is
    /// z itself, whose direction is e^{2 pi i t}; a quarter arc lifts by
    /// exactly a quarter turn.
    #[test]
    fn quarter_arc_quarter_turn() {
        let f = PlaneMap::linear(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0));
        let v = fractional_index(&circle(), 0.0, 0.25, &f).unwrap();
        assert!((v - 0.25).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn homotopy_stability_along_fixed_point_free_levels() {
        // Linear homotopy between -z/2 and -z/2 + 0.1: every level is fixed
        // point free on the circle, and the index stays 1 at each level.
        let c = circle();
        for k in 0..=10 {
            let s = k as f64 / 10.0;
            let f = PlaneMap::Polynomial(crate::map::Polynomial::new(vec![
                Complex64::new(0.1 * s, 0.0),
                Complex64::new(-0.5, 0.0),
            ]));
            assert_eq!(index(&c, &f).unwrap(), 1);
        }
    }
}
