use super::{winding_number, GeomError, Point, Rect, EPS_GEOM};
use serde::{Deserialize, Serialize};

/// Distance from `p` to the closed segment `[a, b]`.
pub fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Closest parameter t in [0,1] of `p` on segment `[a, b]`.
pub fn segment_closest_t(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return 0.0;
    }
    ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0)
}

/// Proper or touching intersection test for closed segments.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    segment_intersection(a, b, c, d).is_some()
}

/// Intersection point of segments `[a,b]` and `[c,d]` if any. Collinear
/// overlaps report one point of the overlap.
pub fn segment_intersection(a: Point, b: Point, c: Point, d: Point) -> Option<Point> {
    let r = b - a;
    let s = d - c;
    let denom = r.cross(s);
    let qp = c - a;
    if denom.abs() < 1e-300 {
        // Parallel. Check collinear overlap.
        if qp.cross(r).abs() > 1e-12 * (1.0 + r.norm() + qp.norm()) {
            return None;
        }
        let rr = r.norm_sq();
        if rr == 0.0 {
            return if segment_distance(a, c, d) <= EPS_GEOM {
                Some(a)
            } else {
                None
            };
        }
        let t0 = qp.dot(r) / rr;
        let t1 = (d - a).dot(r) / rr;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let lo = lo.max(0.0);
        let hi = hi.min(1.0);
        if lo <= hi {
            return Some(a + r * lo);
        }
        return None;
    }
    let t = qp.cross(s) / denom;
    let u = qp.cross(r) / denom;
    if (-1e-12..=1.0 + 1e-12).contains(&t) && (-1e-12..=1.0 + 1e-12).contains(&u) {
        Some(a + r * t)
    } else {
        None
    }
}

/// An open polyline or a simple closed polygon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyCurve {
    vertices: Vec<Point>,
    closed: bool,
}

impl PolyCurve {
    /// An open polyline with at least two vertices.
    pub fn open(vertices: Vec<Point>) -> Result<Self, GeomError> {
        Self::build(vertices, false)
    }

    /// A simple closed polygon. The last vertex is implicitly joined to the
    /// first; self-intersections are rejected.
    pub fn closed(vertices: Vec<Point>) -> Result<Self, GeomError> {
        let c = Self::build(vertices, true)?;
        if c.self_intersects() {
            return Err(GeomError::InvalidCurve(
                "closed curve intersects itself".into(),
            ));
        }
        Ok(c)
    }

    /// A closed polygonal path that may self-intersect (an image curve, for
    /// instance). Winding numbers are still well defined on it.
    pub fn closed_path(vertices: Vec<Point>) -> Result<Self, GeomError> {
        Self::build(vertices, true)
    }

    fn build(vertices: Vec<Point>, closed: bool) -> Result<Self, GeomError> {
        if vertices.len() < 2 {
            return Err(GeomError::InvalidCurve("fewer than 2 vertices".into()));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::InvalidCurve("non-finite coordinate".into()));
        }
        let n = vertices.len();
        let last = if closed { n } else { n - 1 };
        for i in 0..last {
            if vertices[i].close(vertices[(i + 1) % n], EPS_GEOM) {
                return Err(GeomError::InvalidCurve(format!(
                    "consecutive vertices {} and {} coincide",
                    i,
                    (i + 1) % n
                )));
            }
        }
        Ok(PolyCurve { vertices, closed })
    }

    /// Regular n-gon inscribed in the circle of given center and radius,
    /// counterclockwise, first vertex at angle 0.
    pub fn regular_polygon(center: Point, radius: f64, n: usize) -> Self {
        let vertices = (0..n)
            .map(|k| center + Point::unit(k as f64 / n as f64) * radius)
            .collect();
        PolyCurve::closed(vertices).expect("regular polygon is simple")
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn segment_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn segment(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..self.segment_count()).map(move |i| self.segment(i))
    }

    pub fn total_length(&self) -> f64 {
        self.segments().map(|(a, b)| a.dist(b)).sum()
    }

    /// Point at arc-length fraction `t` in [0, 1] of the total length.
    pub fn point_at(&self, t: f64) -> Point {
        let total = self.total_length();
        let mut target = t.clamp(0.0, 1.0) * total;
        for (a, b) in self.segments() {
            let l = a.dist(b);
            if target <= l || l == 0.0 {
                return a.lerp(b, if l == 0.0 { 0.0 } else { target / l });
            }
            target -= l;
        }
        if self.closed {
            self.vertices[0]
        } else {
            *self.vertices.last().unwrap()
        }
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        self.segments()
            .map(|(a, b)| segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Arc-length fraction in [0,1) of the point on the curve closest to `p`.
    pub fn closest_fraction(&self, p: Point) -> f64 {
        let mut best = f64::INFINITY;
        let mut best_len = 0.0;
        let mut acc = 0.0;
        for (a, b) in self.segments() {
            let l = a.dist(b);
            let t = segment_closest_t(p, a, b);
            let d = p.dist(a.lerp(b, t));
            if d < best {
                best = d;
                best_len = acc + t * l;
            }
            acc += l;
        }
        (best_len / self.total_length()).clamp(0.0, 1.0) % 1.0
    }

    pub fn bounding_box(&self) -> Rect {
        Rect::from_points(&self.vertices).expect("curve has vertices")
    }

    /// Reversed orientation, same geometry.
    pub fn reversed(&self) -> PolyCurve {
        let mut v = self.vertices.clone();
        v.reverse();
        PolyCurve {
            vertices: v,
            closed: self.closed,
        }
    }

    /// Cyclic rotation of the vertex list (closed curves only).
    pub fn rotated(&self, k: usize) -> PolyCurve {
        assert!(self.closed);
        let n = self.vertices.len();
        let v = (0..n).map(|i| self.vertices[(i + k) % n]).collect();
        PolyCurve {
            vertices: v,
            closed: true,
        }
    }

    /// Twice the signed area; positive for counterclockwise closed curves.
    pub fn signed_area2(&self) -> f64 {
        self.segments().map(|(a, b)| a.cross(b)).sum()
    }

    fn self_intersects(&self) -> bool {
        let n = self.segment_count();
        for i in 0..n {
            let (a, b) = self.segment(i);
            for j in i + 1..n {
                // Skip neighbors sharing an endpoint.
                if j == i + 1 || (i == 0 && j == n - 1 && self.closed) {
                    continue;
                }
                let (c, d) = self.segment(j);
                if segments_intersect(a, b, c, d) {
                    return true;
                }
            }
        }
        false
    }

    /// Interior/boundary membership for closed curves: winding parity with a
    /// boundary tolerance.
    pub fn encloses(&self, p: Point) -> bool {
        debug_assert!(self.closed);
        if self.distance_to(p) <= EPS_GEOM {
            return true;
        }
        match winding_number(self, p) {
            Ok(w) => w != 0,
            Err(_) => true,
        }
    }
}

/// A polygonal embedding of a compact plane set: a filled simple polygon, a
/// straight-edge tree, or a disjoint union of such pieces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PolyContinuum {
    /// Filled region bounded by a simple closed polygon.
    Polygon(PolyCurve),
    /// Embedded tree: vertex coordinates plus edges (may be a single point).
    Tree {
        vertices: Vec<Point>,
        edges: Vec<(usize, usize)>,
    },
    /// Disjoint union of continua.
    Union(Vec<PolyContinuum>),
}

impl PolyContinuum {
    pub fn polygon(vertices: Vec<Point>) -> Result<Self, GeomError> {
        Ok(PolyContinuum::Polygon(PolyCurve::closed(vertices)?))
    }

    /// A segment viewed as a two-vertex tree.
    pub fn segment(a: Point, b: Point) -> Self {
        PolyContinuum::Tree {
            vertices: vec![a, b],
            edges: vec![(0, 1)],
        }
    }

    pub fn point(p: Point) -> Self {
        PolyContinuum::Tree {
            vertices: vec![p],
            edges: vec![],
        }
    }

    /// Boundary segments of the embedded set.
    pub fn boundary_segments(&self) -> Vec<(Point, Point)> {
        match self {
            PolyContinuum::Polygon(c) => c.segments().collect(),
            PolyContinuum::Tree { vertices, edges } => edges
                .iter()
                .map(|&(u, v)| (vertices[u], vertices[v]))
                .collect(),
            PolyContinuum::Union(parts) => {
                parts.iter().flat_map(|p| p.boundary_segments()).collect()
            }
        }
    }

    /// Corner points of the boundary.
    pub fn corner_points(&self) -> Vec<Point> {
        match self {
            PolyContinuum::Polygon(c) => c.vertices().to_vec(),
            PolyContinuum::Tree { vertices, .. } => vertices.clone(),
            PolyContinuum::Union(parts) => parts.iter().flat_map(|p| p.corner_points()).collect(),
        }
    }

    /// Membership in the compact set (filled interior for polygons).
    pub fn contains(&self, p: Point) -> bool {
        match self {
            PolyContinuum::Polygon(c) => c.encloses(p),
            PolyContinuum::Tree { .. } => self.distance_to(p) <= EPS_GEOM,
            PolyContinuum::Union(parts) => parts.iter().any(|part| part.contains(p)),
        }
    }

    /// Distance to the set (zero inside a filled polygon).
    pub fn distance_to(&self, p: Point) -> f64 {
        match self {
            PolyContinuum::Polygon(c) => {
                if c.encloses(p) {
                    0.0
                } else {
                    c.distance_to(p)
                }
            }
            PolyContinuum::Tree { vertices, edges } => {
                if edges.is_empty() {
                    return vertices.first().map_or(f64::INFINITY, |v| v.dist(p));
                }
                edges
                    .iter()
                    .map(|&(u, v)| segment_distance(p, vertices[u], vertices[v]))
                    .fold(f64::INFINITY, f64::min)
            }
            PolyContinuum::Union(parts) => parts
                .iter()
                .map(|part| part.distance_to(p))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Distance from `p` to the topological boundary.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        self.boundary_segments()
            .iter()
            .map(|&(a, b)| segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn bounding_box(&self) -> Rect {
        let pts = self.corner_points();
        Rect::from_points(&pts).expect("continuum has points")
    }

    pub fn is_connected(&self) -> bool {
        match self {
            PolyContinuum::Polygon(_) => true,
            PolyContinuum::Tree { vertices, edges } => {
                if vertices.len() <= 1 {
                    return true;
                }
                let mut seen = vec![false; vertices.len()];
                let mut stack = vec![0usize];
                seen[0] = true;
                while let Some(u) = stack.pop() {
                    for &(a, b) in edges {
                        for (x, y) in [(a, b), (b, a)] {
                            if x == u && !seen[y] {
                                seen[y] = true;
                                stack.push(y);
                            }
                        }
                    }
                }
                seen.iter().all(|&s| s)
            }
            PolyContinuum::Union(parts) => parts.len() <= 1 && parts.iter().all(|p| p.is_connected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_polygon_accepts_square() {
        let sq = PolyCurve::closed(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap();
        assert!(sq.encloses(Point::ZERO));
        assert!(!sq.encloses(Point::new(3.0, 0.0)));
        assert!(sq.encloses(Point::new(1.0, 0.0)));
        assert!(sq.signed_area2() > 0.0);
    }

    #[test]
    fn rejects_self_intersecting_polygon() {
        let bow = PolyCurve::closed(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ]);
        assert!(bow.is_err());
    }

    #[test]
    fn rejects_duplicate_vertices() {
        let c = PolyCurve::open(vec![Point::ZERO, Point::ZERO]);
        assert!(c.is_err());
    }

    #[test]
    fn tree_distance() {
        let t = PolyContinuum::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0));
        assert!(t.contains(Point::new(0.5, 0.0)));
        assert!(!t.contains(Point::new(0.0, 0.5)));
        assert!((t.distance_to(Point::new(0.0, 0.5)) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn segment_intersection_cases() {
        let p = segment_intersection(
            Point::new(0.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
            Point::new(2.0, 0.0),
        )
        .unwrap();
        assert!(p.close(Point::new(1.0, 1.0), 1e-12));
        assert!(segment_intersection(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
        )
        .is_none());
        // Collinear overlap.
        assert!(segments_intersect(
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(3.0, 0.0),
        ));
    }
}
