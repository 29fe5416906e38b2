use super::{GeneralizedBall, Point};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Plain circle used by the enclosing-ball machinery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn contains(&self, p: Point, slack: f64) -> bool {
        p.dist(self.center) <= self.radius + slack
    }

    pub fn to_disk(&self) -> GeneralizedBall {
        GeneralizedBall::disk(self.center, self.radius)
    }
}

/// Circumcircle of three points; `None` for (near-)collinear triples.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Option<Circle> {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    let scale = (b - a).norm() * (c - b).norm() * (a - c).norm();
    if d.abs() < 1e-14 * (1.0 + scale) {
        return None;
    }
    let asq = a.norm_sq();
    let bsq = b.norm_sq();
    let csq = c.norm_sq();
    let ux = (asq * (b.y - c.y) + bsq * (c.y - a.y) + csq * (a.y - b.y)) / d;
    let uy = (asq * (c.x - b.x) + bsq * (a.x - c.x) + csq * (b.x - a.x)) / d;
    let center = Point::new(ux, uy);
    Some(Circle {
        center,
        radius: center.dist(a),
    })
}

fn diameter_circle(a: Point, b: Point) -> Circle {
    let center = (a + b) * 0.5;
    Circle {
        center,
        radius: center.dist(a),
    }
}

const WELZL_SLACK: f64 = 1e-12;

fn circle_two(points: &[Point], p: Point, q: Point) -> Circle {
    let mut circ = diameter_circle(p, q);
    let pq = q - p;
    let mut left: Option<Circle> = None;
    let mut right: Option<Circle> = None;
    for &r in points {
        if circ.contains(r, WELZL_SLACK * (1.0 + circ.radius)) {
            continue;
        }
        let cross = pq.cross(r - p);
        if let Some(c) = circumcircle(p, q, r) {
            let side = pq.cross(c.center - p);
            if cross > 0.0 && left.map_or(true, |l| side > pq.cross(l.center - p)) {
                left = Some(c);
            } else if cross < 0.0 && right.map_or(true, |l| side < pq.cross(l.center - p)) {
                right = Some(c);
            }
        }
    }
    match (left, right) {
        (None, None) => circ,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                circ = l;
            } else {
                circ = r;
            }
            circ
        }
    }
}

fn circle_one(points: &[Point], p: Point) -> Circle {
    let mut c = Circle {
        center: p,
        radius: 0.0,
    };
    for (i, &q) in points.iter().enumerate() {
        if !c.contains(q, WELZL_SLACK * (1.0 + c.radius)) {
            c = if c.radius == 0.0 {
                diameter_circle(p, q)
            } else {
                circle_two(&points[..=i], p, q)
            };
        }
    }
    c
}

/// Smallest circle enclosing a point set (Welzl-style randomized incremental
/// construction with an internal fixed seed, so results are deterministic).
pub fn smallest_enclosing_circle(points: &[Point]) -> Option<Circle> {
    if points.is_empty() {
        return None;
    }
    let mut shuffled = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    shuffled.shuffle(&mut rng);
    let mut c = Circle {
        center: shuffled[0],
        radius: 0.0,
    };
    for i in 1..shuffled.len() {
        let p = shuffled[i];
        if !c.contains(p, WELZL_SLACK * (1.0 + c.radius)) {
            c = circle_one(&shuffled[..i], p);
        }
    }
    Some(c)
}

/// Smallest closed disk containing all input points. The singleton input
/// yields a radius-zero disk.
pub fn smallest_enclosing_ball(points: &[Point]) -> Option<GeneralizedBall> {
    smallest_enclosing_circle(points).map(|c| c.to_disk())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    /// Brute-force oracle over all vertex pairs and triples.
    fn brute_force(points: &[Point]) -> Circle {
        let mut best: Option<Circle> = None;
        let slack = 1e-9;
        let mut consider = |c: Circle| {
            if points.iter().all(|&p| c.contains(p, slack))
                && best.map_or(true, |b| c.radius < b.radius)
            {
                best = Some(c);
            }
        };
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                consider(diameter_circle(points[i], points[j]));
                for k in j + 1..points.len() {
                    if let Some(c) = circumcircle(points[i], points[j], points[k]) {
                        consider(c);
                    }
                }
            }
        }
        best.unwrap_or(Circle {
            center: points[0],
            radius: 0.0,
        })
    }

    #[test]
    fn unit_square_corners() {
        let pts = vec![
            Point::new(1.0, 1.0),
            Point::new(1.0, -1.0),
            Point::new(-1.0, 1.0),
            Point::new(-1.0, -1.0),
        ];
        let c = smallest_enclosing_circle(&pts).unwrap();
        assert!(c.center.close(Point::ZERO, 1e-12));
        assert!((c.radius - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn singleton_is_degenerate() {
        let c = smallest_enclosing_circle(&[Point::ZERO]).unwrap();
        assert_eq!(c.radius, 0.0);
        assert_eq!(c.center, Point::ZERO);
    }

    #[test]
    fn matches_brute_force_on_random_clouds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let pts: Vec<Point> = (0..50)
                .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
                .collect();
            let fast = smallest_enclosing_circle(&pts).unwrap();
            let slow = brute_force(&pts);
            assert!(
                (fast.radius - slow.radius).abs() < 1e-9,
                "radius {} vs oracle {}",
                fast.radius,
                slow.radius
            );
            assert!(fast.center.close(slow.center, 1e-7));
        }
    }

    #[test]
    fn output_contains_inputs_and_is_supported() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let pts: Vec<Point> = (0..30)
                .map(|_| Point::new(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0))
                .collect();
            let c = smallest_enclosing_circle(&pts).unwrap();
            for &p in &pts {
                assert!(p.dist(c.center) <= c.radius + 1e-9);
            }
            let on_boundary = pts
                .iter()
                .filter(|p| (p.dist(c.center) - c.radius).abs() <= 1e-7)
                .count();
            assert!(on_boundary >= 2, "support has {} points", on_boundary);
        }
    }
}
