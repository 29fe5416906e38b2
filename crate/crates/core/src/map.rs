//! Evaluatable maps of the plane.

use crate::geom::{Point, PolyCurve};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

fn to_c(p: Point) -> Complex64 {
    Complex64::new(p.x, p.y)
}

fn from_c(z: Complex64) -> Point {
    Point::new(z.re, z.im)
}

/// A polynomial with complex coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    /// Coefficients `c0 + c1 z + c2 z^2 + ...`; the leading one is nonzero.
    pub coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().norm() == 0.0 {
            coeffs.pop();
        }
        assert!(!coeffs.is_empty(), "polynomial needs a coefficient");
        Polynomial { coeffs }
    }

    /// Real-coefficient convenience constructor.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::new(vec![Complex64::new(0.0, 0.0)]);
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// `P(z) - z`.
    pub fn minus_identity(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < 2 {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        coeffs[1] -= 1.0;
        Polynomial::new(coeffs)
    }
}

/// A map defined by images of the points of a polyline; evaluation projects
/// the argument to the nearest curve point and interpolates linearly. Used
/// for maps that only ever get evaluated on the curve itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveMap {
    pub curve: PolyCurve,
    pub images: Vec<Point>,
}

impl CurveMap {
    pub fn new(curve: PolyCurve, images: Vec<Point>) -> Self {
        assert_eq!(curve.len(), images.len(), "one image per curve vertex");
        CurveMap { curve, images }
    }

    pub fn eval(&self, p: Point) -> Point {
        let n = self.curve.len();
        let mut best = f64::INFINITY;
        let mut seg = 0usize;
        let mut t = 0.0f64;
        for i in 0..self.curve.segment_count() {
            let (a, b) = self.curve.segment(i);
            let s = crate::geom::segment_closest_t(p, a, b);
            let d = p.dist(a.lerp(b, s));
            if d < best {
                best = d;
                seg = i;
                t = s;
            }
        }
        let u = self.images[seg % n];
        let v = self.images[(seg + 1) % n];
        u.lerp(v, t)
    }
}

/// Evaluatable map of the plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PlaneMap {
    Polynomial(Polynomial),
    /// `z -> (az + b) / (cz + d)`.
    Moebius {
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    },
    /// Real-affine `p -> M p + t`.
    Affine { matrix: [[f64; 2]; 2], offset: Point },
    /// Piecewise-linear map prescribed on one or more curves; evaluation off
    /// the curves projects to the nearest one.
    CurveSampled(Vec<CurveMap>),
}

impl PlaneMap {
    pub fn polynomial_real(coeffs: &[f64]) -> Self {
        PlaneMap::Polynomial(Polynomial::from_real(coeffs))
    }

    pub fn constant(c: Point) -> Self {
        PlaneMap::Polynomial(Polynomial::new(vec![to_c(c)]))
    }

    /// `z -> s z + t` as a complex-linear map.
    pub fn linear(s: Complex64, t: Complex64) -> Self {
        PlaneMap::Polynomial(Polynomial::new(vec![t, s]))
    }

    pub fn eval(&self, p: Point) -> Point {
        match self {
            PlaneMap::Polynomial(poly) => from_c(poly.eval(to_c(p))),
            PlaneMap::Moebius { a, b, c, d } => {
                let z = to_c(p);
                from_c((a * z + b) / (c * z + d))
            }
            PlaneMap::Affine { matrix, offset } => Point::new(
                matrix[0][0] * p.x + matrix[0][1] * p.y + offset.x,
                matrix[1][0] * p.x + matrix[1][1] * p.y + offset.y,
            ),
            PlaneMap::CurveSampled(pieces) => {
                let mut best = f64::INFINITY;
                let mut val = p;
                for piece in pieces {
                    let d = piece.curve.distance_to(p);
                    if d < best {
                        best = d;
                        val = piece.eval(p);
                    }
                }
                val
            }
        }
    }

    /// Displacement `f(p) - p`.
    pub fn displacement(&self, p: Point) -> Point {
        self.eval(p) - p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_eval_and_derivative() {
        // z^2 - 1
        let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
        assert_eq!(p.degree(), 2);
        let v = p.eval(Complex64::new(2.0, 0.0));
        assert!((v - Complex64::new(3.0, 0.0)).norm() < 1e-15);
        let d = p.derivative();
        assert_eq!(d.coeffs, vec![Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)]);
    }

    #[test]
    fn affine_eval() {
        let f = PlaneMap::Affine {
            matrix: [[0.0, -1.0], [1.0, 0.0]],
            offset: Point::new(1.0, 0.0),
        };
        let q = f.eval(Point::new(2.0, 3.0));
        assert!(q.close(Point::new(-2.0, 2.0), 1e-15));
    }

    #[test]
    fn curve_map_interpolates() {
        let curve = PolyCurve::open(vec![Point::ZERO, Point::new(2.0, 0.0)]).unwrap();
        let f = CurveMap::new(curve, vec![Point::new(0.0, 1.0), Point::new(0.0, 3.0)]);
        let v = f.eval(Point::new(1.0, 0.0));
        assert!(v.close(Point::new(0.0, 2.0), 1e-12));
        // Off-curve points project first.
        let v = f.eval(Point::new(1.0, 5.0));
        assert!(v.close(Point::new(0.0, 2.0), 1e-12));
    }
}
