use super::{index_with, IndexVarError};
use crate::geom::{Point, PolyCurve, Rect, EPS_FIX};
use crate::map::PlaneMap;
use serde::Serialize;

/// A fixed-point enclosure found by quadtree subdivision: a cluster of
/// adjacent max-depth boxes of nonzero boundary index.
#[derive(Debug, Clone, Serialize)]
pub struct Enclosure {
    pub center: Point,
    pub index: i32,
    pub boxes: Vec<Rect>,
}

/// Quadtree localization of fixed points: recurse into sub-boxes whose
/// boundary index is nonzero; max-depth leaf boxes are clustered into
/// enclosures carrying the summed index.
///
/// Subdivision lines are jittered (up to `0.1 * 2^-depth` box widths, five
/// retries) when a fixed point sits on them.
pub fn locate_fixed_points(
    region: Rect,
    f: &PlaneMap,
    max_depth: u32,
) -> Result<Vec<Enclosure>, IndexVarError> {
    let mut leaves: Vec<(Rect, i32)> = Vec::new();
    let root_index = box_index(region, f).map_err(|e| match e {
        IndexVarError::FixedPointOnCurve => IndexVarError::BoundaryFixedPoint,
        other => other,
    })?;
    if root_index != 0 {
        subdivide(region, root_index, f, 0, max_depth, &mut leaves)?;
    }
    Ok(cluster(leaves))
}

fn box_index(b: Rect, f: &PlaneMap) -> Result<i32, IndexVarError> {
    let curve = boundary_curve(b);
    index_with(&curve, f, EPS_FIX * b.width().max(b.height()).min(1.0))
}

fn boundary_curve(b: Rect) -> PolyCurve {
    // Densify each side so the adaptive lift starts from a fair sample.
    let mut pts = Vec::with_capacity(32);
    let corners = [
        b.min,
        Point::new(b.max.x, b.min.y),
        b.max,
        Point::new(b.min.x, b.max.y),
    ];
    for i in 0..4 {
        let (u, v) = (corners[i], corners[(i + 1) % 4]);
        for k in 0..8 {
            pts.push(u.lerp(v, k as f64 / 8.0));
        }
    }
    PolyCurve::closed(pts).expect("box boundary is simple")
}

fn subdivide(
    b: Rect,
    b_index: i32,
    f: &PlaneMap,
    depth: u32,
    max_depth: u32,
    leaves: &mut Vec<(Rect, i32)>,
) -> Result<(), IndexVarError> {
    if depth >= max_depth {
        leaves.push((b, b_index));
        return Ok(());
    }
    // Split point: center, jittered on retry when a fixed point obstructs a
    // child boundary.
    let jitter_scale = 0.1 * 0.5f64.powi(depth as i32);
    'retry: for attempt in 0..5 {
        let offset = match attempt {
            0 => Point::ZERO,
            k => {
                let a = k as f64 * 2.39996; // golden-angle spiral
                Point::new(a.cos(), a.sin()) * (jitter_scale * b.width() * k as f64 / 4.0)
            }
        };
        let c = b.center() + offset;
        if c.x <= b.min.x || c.x >= b.max.x || c.y <= b.min.y || c.y >= b.max.y {
            continue;
        }
        let children = [
            Rect::new(b.min, c),
            Rect::new(Point::new(c.x, b.min.y), Point::new(b.max.x, c.y)),
            Rect::new(c, b.max),
            Rect::new(Point::new(b.min.x, c.y), Point::new(c.x, b.max.y)),
        ];
        let mut child_indices = Vec::with_capacity(4);
        for child in &children {
            match box_index(*child, f) {
                Ok(i) => child_indices.push(i),
                Err(IndexVarError::FixedPointOnCurve) => continue 'retry,
                Err(e) => return Err(e),
            }
        }
        for (child, ci) in children.iter().zip(child_indices) {
            if ci != 0 {
                subdivide(*child, ci, f, depth + 1, max_depth, leaves)?;
            }
        }
        return Ok(());
    }
    Err(IndexVarError::BoundaryFixedPoint)
}

/// Group touching leaf boxes into connected clusters; indices add.
fn cluster(leaves: Vec<(Rect, i32)>) -> Vec<Enclosure> {
    let n = leaves.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let touches = |a: &Rect, b: &Rect| -> bool {
        let eps = 1e-9 * (a.width() + b.width()).max(1.0);
        a.min.x <= b.max.x + eps
            && b.min.x <= a.max.x + eps
            && a.min.y <= b.max.y + eps
            && b.min.y <= a.max.y + eps
    };
    for i in 0..n {
        for j in i + 1..n {
            if touches(&leaves[i].0, &leaves[j].0) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Enclosure> = groups
        .into_values()
        .map(|members| {
            let index = members.iter().map(|&i| leaves[i].1).sum();
            let boxes: Vec<Rect> = members.iter().map(|&i| leaves[i].0).collect();
            let center = boxes
                .iter()
                .fold(Point::ZERO, |acc, b| acc + b.center())
                / boxes.len() as f64;
            Enclosure {
                center,
                index,
                boxes,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.center.x, a.center.y)
            .partial_cmp(&(b.center.x, b.center.y))
            .unwrap()
    });
    out
}
