use super::{GeomError, Point, PolyCurve, EPS_GEOM};

/// Winding number of a closed polygonal curve about `w`, counterclockwise
/// positive.
///
/// Signed angle increments are summed edge by edge (each increment is an
/// exact `atan2` of the edge's endpoint vectors, so there is no lift drift to
/// accumulate); the sum is rounded to the nearest integer and the residual is
/// checked.
pub fn winding_number(curve: &PolyCurve, w: Point) -> Result<i32, GeomError> {
    winding_number_with(curve, w, EPS_GEOM)
}

pub fn winding_number_with(curve: &PolyCurve, w: Point, eps: f64) -> Result<i32, GeomError> {
    assert!(curve.is_closed(), "winding number needs a closed curve");
    if curve.distance_to(w) <= eps {
        return Err(GeomError::PointOnCurve);
    }
    let mut total = 0.0f64;
    for (a, b) in curve.segments() {
        let u = a - w;
        let v = b - w;
        total += u.cross(v).atan2(u.dot(v));
    }
    let turns = total / std::f64::consts::TAU;
    let rounded = turns.round();
    let residual = (turns - rounded).abs();
    if residual > 0.1 {
        return Err(GeomError::WindingResidual(residual));
    }
    Ok(rounded as i32)
}
