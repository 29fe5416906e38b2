use super::contacts::{interior_empty, validate_maximal};
use super::{KpError, MaximalBall};
use crate::geom::{
    circumcircle, segment_closest_t, smallest_enclosing_circle, GeneralizedBall, Point,
    PolyContinuum, PolyCurve,
};

/// Contact sites of the boundary: corner points and open edges.
#[derive(Debug, Clone, Copy)]
enum Site {
    Vertex(Point),
    Edge(Point, Point),
}

impl Site {
    fn distance(&self, p: Point) -> f64 {
        match *self {
            Site::Vertex(v) => p.dist(v),
            Site::Edge(a, b) => crate::geom::segment_distance(p, a, b),
        }
    }

    /// Whether the closest point of the site to `p` is attained away from
    /// the site's ends (vertex sites always qualify).
    fn foot_interior(&self, p: Point) -> bool {
        match *self {
            Site::Vertex(_) => true,
            Site::Edge(a, b) => {
                let t = segment_closest_t(p, a, b);
                t > 1e-9 && t < 1.0 - 1e-9
            }
        }
    }
}

/// One-parameter candidate family: a parametrized center/radius curve.
struct Family {
    center: Box<dyn Fn(f64) -> Option<(Point, f64)>>,
    exterior: bool,
}

const SCAN: usize = 4;

/// The finite set of combinatorially distinct maximal balls of the
/// complement of `k`, with one-parameter two-contact families sampled at
/// `budget` parameter values each (family endpoints, where a further contact
/// appears, are refined and included).
pub fn maximal_balls(k: &PolyContinuum, budget: usize) -> Result<Vec<MaximalBall>, KpError> {
    let corners = dedupe_points(k.corner_points());
    if corners.len() < 2 && k.boundary_segments().is_empty() {
        return Err(KpError::DegenerateRegion(
            "need at least two boundary points".into(),
        ));
    }
    let scale = k.bounding_box().diameter().max(1e-6);
    let tol = 1e-9 * (1.0 + scale);
    let valid = |ball: GeneralizedBall| interior_empty(ball, k, tol);

    let mut candidates: Vec<GeneralizedBall> = Vec::new();

    // Supporting half-planes through convex hull edges.
    let hull = convex_hull(&corners);
    for i in 0..hull.len() {
        let a = hull[i];
        let b = hull[(i + 1) % hull.len()];
        if a.close(b, 1e-12) {
            continue;
        }
        let outward = (b - a).normalize().perp() * -1.0;
        let hp = GeneralizedBall::half_plane(a, outward);
        if valid(hp) {
            candidates.push(hp);
        }
    }
    if hull.len() == 2 {
        // Collinear continuum: both supporting half-planes of the line.
        let dir = (hull[1] - hull[0]).normalize();
        for n in [dir.perp(), dir.perp() * -1.0] {
            let hp = GeneralizedBall::half_plane(hull[0], n);
            if valid(hp) {
                candidates.push(hp);
            }
        }
    }

    // The smallest enclosing ball's exterior, and exterior circumcircles of
    // hull triples.
    if let Some(c) = smallest_enclosing_circle(&corners) {
        if c.radius > tol {
            candidates.push(GeneralizedBall::exterior_disk(c.center, c.radius));
        }
    }
    for i in 0..hull.len() {
        for j in i + 1..hull.len() {
            for l in j + 1..hull.len() {
                if let Some(c) = circumcircle(hull[i], hull[j], hull[l]) {
                    let ball = GeneralizedBall::exterior_disk(c.center, c.radius);
                    if valid(ball) {
                        candidates.push(ball);
                    }
                }
            }
        }
    }

    // One-parameter families.
    let sites = collect_sites(k);
    let mut families: Vec<Family> = Vec::new();
    for i in 0..sites.len() {
        for j in i + 1..sites.len() {
            families.extend(pair_families(sites[i], sites[j], scale));
        }
    }
    // Exterior families through hull vertex pairs.
    for i in 0..hull.len() {
        for j in i + 1..hull.len() {
            families.push(exterior_family(hull[i], hull[j], scale));
        }
    }

    for fam in &families {
        scan_family(fam, &sites, k, tol, budget, &mut candidates);
    }

    // Validate, attach contacts, dedupe.
    let mut out: Vec<MaximalBall> = Vec::new();
    for ball in candidates {
        if let Ok(mb) = validate_maximal(ball, k, (1e-7 * (1.0 + scale)).max(tol)) {
            if !out.iter().any(|o| same_ball(o.ball, mb.ball, 1e-6 * scale)) {
                out.push(mb);
            }
        }
    }
    Ok(out)
}

/// Maximal open balls inside a simple polygon (the interior medial
/// structure): disks contained in the closed region with at least two
/// boundary contacts.
pub fn maximal_balls_inside(
    polygon: &PolyCurve,
    budget: usize,
) -> Result<Vec<MaximalBall>, KpError> {
    if !polygon.is_closed() {
        return Err(KpError::DegenerateRegion("polygon must be closed".into()));
    }
    let region = PolyContinuum::Polygon(polygon.clone());
    let scale = polygon.bounding_box().diameter();
    let tol = 1e-9 * (1.0 + scale);
    let valid = |ball: GeneralizedBall| -> bool {
        match ball {
            GeneralizedBall::Disk { center, radius } => {
                polygon.encloses(center) && polygon.distance_to(center) >= radius - tol
            }
            _ => false,
        }
    };

    let sites = collect_sites(&region);
    let mut candidates: Vec<GeneralizedBall> = Vec::new();
    let mut families: Vec<Family> = Vec::new();
    for i in 0..sites.len() {
        for j in i + 1..sites.len() {
            families.extend(pair_families(sites[i], sites[j], scale));
        }
    }
    for fam in &families {
        if fam.exterior {
            continue;
        }
        scan_family_with(fam, &sites, budget, &valid, &mut candidates);
    }

    let mut out: Vec<MaximalBall> = Vec::new();
    for ball in candidates {
        if !valid(ball) {
            continue;
        }
        let contacts = super::contacts::contact_components(ball, &region, (1e-7 * (1.0 + scale)).max(tol));
        let mb = MaximalBall { ball, contacts };
        if mb.contact_point_count() < 2 {
            continue;
        }
        if !out.iter().any(|o| same_ball(o.ball, mb.ball, 1e-6 * scale)) {
            out.push(mb);
        }
    }
    Ok(out)
}

fn collect_sites(k: &PolyContinuum) -> Vec<Site> {
    let mut sites: Vec<Site> = dedupe_points(k.corner_points())
        .into_iter()
        .map(Site::Vertex)
        .collect();
    for (a, b) in k.boundary_segments() {
        sites.push(Site::Edge(a, b));
    }
    sites
}

fn dedupe_points(pts: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts {
        if !out.iter().any(|q| q.close(p, 1e-12)) {
            out.push(p);
        }
    }
    out
}

/// Counterclockwise convex hull (monotone chain); collinear inputs give the
/// two extreme points.
pub(crate) fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.close(*b, 1e-12));
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && (lower[lower.len() - 1] - lower[lower.len() - 2])
                .cross(p - lower[lower.len() - 1])
                <= 1e-12
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && (upper[upper.len() - 1] - upper[upper.len() - 2])
                .cross(p - upper[upper.len() - 1])
                <= 1e-12
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 2 {
        // All collinear: extremes only.
        return vec![pts[0], *pts.last().unwrap()];
    }
    lower
}

/// Candidate families for a pair of sites: centers equidistant from both.
fn pair_families(s1: Site, s2: Site, scale: f64) -> Vec<Family> {
    let mut fams: Vec<Family> = Vec::new();
    match (s1, s2) {
        (Site::Vertex(v1), Site::Vertex(v2)) => {
            if v1.close(v2, 1e-12) {
                return fams;
            }
            let m = (v1 + v2) * 0.5;
            let n = (v2 - v1).normalize().perp();
            fams.push(Family {
                center: Box::new(move |u| {
                    let t = param_to_t(u, scale);
                    let c = m + n * t;
                    Some((c, c.dist(v1)))
                }),
                exterior: false,
            });
        }
        (Site::Vertex(v), Site::Edge(a, b)) | (Site::Edge(a, b), Site::Vertex(v)) => {
            // Point-line bisector (parabola), parametrized by the foot
            // position along the edge, one family per side.
            let dir = (b - a).normalize();
            let len = a.dist(b);
            for side in [1.0f64, -1.0] {
                let n = dir.perp() * side;
                fams.push(Family {
                    center: Box::new(move |u| {
                        let s = u * len;
                        let w = a + dir * s;
                        let un = (v - w).dot(n);
                        if un <= 1e-12 {
                            return None;
                        }
                        let d = (v - w).norm_sq() / (2.0 * un);
                        Some((w + n * d, d))
                    }),
                    exterior: false,
                });
            }
        }
        (Site::Edge(a1, b1), Site::Edge(a2, b2)) => {
            // Angle bisectors of the two carrier lines.
            let d1 = (b1 - a1).normalize();
            let d2 = (b2 - a2).normalize();
            let cross = d1.cross(d2);
            if cross.abs() < 1e-12 {
                // Parallel lines: the midline.
                let n = d1.perp();
                let gap = (a2 - a1).dot(n);
                let mid = a1 + n * (gap * 0.5);
                let r = gap.abs() * 0.5;
                if r > 1e-12 {
                    fams.push(Family {
                        center: Box::new(move |u| {
                            let t = param_to_t(u, scale);
                            Some((mid + d1 * t, r))
                        }),
                        exterior: false,
                    });
                }
            } else {
                // Intersection of the carrier lines.
                let t = (a2 - a1).cross(d2) / cross;
                let x = a1 + d1 * t;
                for bis in [
                    (d1 + d2).normalize(),
                    (d1 - d2).normalize(),
                ] {
                    if !bis.is_finite() || bis.norm() < 0.5 {
                        continue;
                    }
                    let n1 = d1.perp();
                    fams.push(Family {
                        center: Box::new(move |u| {
                            let t = param_to_t(u, scale);
                            let c = x + bis * t;
                            let r = (c - a1).dot(n1).abs();
                            Some((c, r))
                        }),
                        exterior: false,
                    });
                }
            }
        }
    }
    fams
}

/// Exterior balls through two points: circles centered on the bisector,
/// containing the continuum.
fn exterior_family(v1: Point, v2: Point, scale: f64) -> Family {
    let m = (v1 + v2) * 0.5;
    let n = (v2 - v1).normalize().perp();
    Family {
        center: Box::new(move |u| {
            let t = param_to_t(u, scale);
            let c = m + n * t;
            Some((c, c.dist(v1)))
        }),
        exterior: true,
    }
}

fn param_to_t(u: f64, scale: f64) -> f64 {
    // u in (0,1) -> t in (-inf, inf), concentrated around +-scale.
    ((u - 0.5) * std::f64::consts::PI).tan() * scale
}

fn scan_family(
    fam: &Family,
    sites: &[Site],
    k: &PolyContinuum,
    tol: f64,
    budget: usize,
    out: &mut Vec<GeneralizedBall>,
) {
    let valid = |ball: GeneralizedBall| interior_empty(ball, k, tol);
    scan_family_with(fam, sites, budget, &valid, out)
}

fn scan_family_with(
    fam: &Family,
    sites: &[Site],
    budget: usize,
    valid: &dyn Fn(GeneralizedBall) -> bool,
    out: &mut Vec<GeneralizedBall>,
) {
    let budget = budget.max(4);
    let grid = SCAN * budget;
    let mk = |u: f64| -> Option<GeneralizedBall> {
        let (c, r) = (fam.center)(u)?;
        if !c.is_finite() || !r.is_finite() || r < 1e-12 || r > 1e9 {
            return None;
        }
        let ball = if fam.exterior {
            GeneralizedBall::exterior_disk(c, r)
        } else {
            GeneralizedBall::disk(c, r)
        };
        // Both defining sites must attain the radius with interior feet.
        Some(ball)
    };
    let ok = |u: f64| -> bool {
        match mk(u) {
            Some(ball) => {
                let (c, r) = match ball {
                    GeneralizedBall::Disk { center, radius }
                    | GeneralizedBall::ExteriorDisk { center, radius } => (center, radius),
                    _ => unreachable!(),
                };
                // Feet interior to edge sites (at least nearly).
                let feet_ok = sites.iter().all(|s| {
                    let d = s.distance(c);
                    if (d - r).abs() > 1e-7 * (1.0 + r) {
                        true
                    } else {
                        s.foot_interior(c) || matches!(s, Site::Vertex(_))
                    }
                });
                feet_ok && valid(ball)
            }
            None => false,
        }
    };

    // Coarse scan for valid runs.
    let us: Vec<f64> = (1..grid).map(|i| i as f64 / grid as f64).collect();
    let flags: Vec<bool> = us.iter().map(|&u| ok(u)).collect();
    let mut i = 0usize;
    while i < us.len() {
        if !flags[i] {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < us.len() && flags[j + 1] {
            j += 1;
        }
        // Run [i, j]: refine endpoints by bisection.
        let lo = if i == 0 {
            us[0]
        } else {
            refine_edge(us[i - 1], us[i], &ok)
        };
        let hi = if j == us.len() - 1 {
            us[j]
        } else {
            refine_edge(us[j + 1], us[j], &ok)
        };
        // Endpoint balls are the gap candidates.
        for u in [lo, hi] {
            if let Some(b) = mk(u) {
                out.push(b);
            }
        }
        // Interior samples.
        let n = budget.min(j - i + 1).max(1);
        for k in 0..n {
            let u = lo + (hi - lo) * (k as f64 + 0.5) / n as f64;
            if ok(u) {
                if let Some(b) = mk(u) {
                    out.push(b);
                }
            }
        }
        i = j + 1;
    }
}

/// Bisect between an invalid parameter and a valid one; returns the valid
/// side of the boundary.
fn refine_edge(bad: f64, good: f64, ok: &dyn Fn(f64) -> bool) -> f64 {
    let (mut bad, mut good) = (bad, good);
    for _ in 0..48 {
        let mid = 0.5 * (bad + good);
        if ok(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

fn same_ball(a: GeneralizedBall, b: GeneralizedBall, tol: f64) -> bool {
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
        ) => n1.close(n2, 1e-9) && ((p2 - p1).dot(n1)).abs() <= tol,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> PolyContinuum {
        PolyContinuum::polygon(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    fn has_half_plane(balls: &[MaximalBall], point: Point, normal: Point) -> bool {
        balls.iter().any(|b| match b.ball {
            GeneralizedBall::HalfPlane { point: p, normal: n } => {
                n.close(normal, 1e-9) && ((point - p).dot(n)).abs() < 1e-9
            }
            _ => false,
        })
    }

    #[test]
    fn unit_square_has_the_five_named_balls() {
        let k = unit_square();
        let balls = maximal_balls(&k, 16).unwrap();
        assert!(has_half_plane(&balls, Point::new(0.0, 1.0), Point::new(0.0, 1.0)));
        assert!(has_half_plane(&balls, Point::new(0.0, -1.0), Point::new(0.0, -1.0)));
        assert!(has_half_plane(&balls, Point::new(1.0, 0.0), Point::new(1.0, 0.0)));
        assert!(has_half_plane(&balls, Point::new(-1.0, 0.0), Point::new(-1.0, 0.0)));
        let sqrt2 = 2.0f64.sqrt();
        let ext = balls.iter().find(|b| {
            matches!(b.ball, GeneralizedBall::ExteriorDisk { center, radius }
                if center.close(Point::ZERO, 1e-9) && (radius - sqrt2).abs() < 1e-9)
        });
        let ext = ext.expect("exterior sqrt(2) ball present");
        assert_eq!(ext.contacts.len(), 4);
    }

    #[test]
    fn unit_square_two_vertex_circumscribing_circles() {
        // Exterior balls through the corner pair 1±i, centered on the real
        // axis on the far side of the square.
        let k = unit_square();
        let balls = maximal_balls(&k, 16).unwrap();
        let two_vertex: Vec<&MaximalBall> = balls
            .iter()
            .filter(|b| {
                matches!(b.ball, GeneralizedBall::ExteriorDisk { center, .. }
                    if center.y.abs() < 1e-9 && center.x < -1e-6)
                    && b.contacts.len() == 2
            })
            .collect();
        assert!(
            !two_vertex.is_empty(),
            "sampled circumscribing circles through 1±i expected"
        );
        for b in two_vertex {
            for c in &b.contacts {
                assert!(c.is_point());
                assert!((c.start.x - 1.0).abs() < 1e-6);
                assert!((c.start.y.abs() - 1.0).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn segment_balls_validated_empty() {
        let k = PolyContinuum::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0));
        let balls = maximal_balls(&k, 8).unwrap();
        assert!(!balls.is_empty());
        // Both supporting half-planes present.
        assert!(has_half_plane(&balls, Point::ZERO, Point::new(0.0, 1.0)));
        assert!(has_half_plane(&balls, Point::ZERO, Point::new(0.0, -1.0)));
        // Every returned ball has empty interior intersection with K,
        // re-checked by sampling K.
        for b in &balls {
            for i in 0..=50 {
                let p = Point::new(-1.0 + 2.0 * i as f64 / 50.0, 0.0);
                assert!(
                    b.ball.signed_boundary_distance(p) >= -1e-6,
                    "ball {:?} swallows {p}",
                    b.ball
                );
            }
        }
    }

    #[test]
    fn square_interior_has_central_gap_ball() {
        let sq = PolyCurve::closed(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap();
        let balls = maximal_balls_inside(&sq, 8).unwrap();
        let central = balls
            .iter()
            .find(|b| matches!(b.ball, GeneralizedBall::Disk { center, radius }
                if center.close(Point::ZERO, 1e-6) && (radius - 1.0).abs() < 1e-6));
        let central = central.expect("inscribed unit disk present");
        // Tangent to all four edges.
        assert_eq!(central.contacts.len(), 4);
        for c in &central.contacts {
            assert!(c.is_point());
        }
    }
}
