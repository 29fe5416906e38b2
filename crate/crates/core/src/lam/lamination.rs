use super::{sigma, Angle, LamError};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// A circularly sorted finite set of angles: a leaf when it has exactly two
/// points, a gap class with three or more, possibly a singleton (degenerate
/// image class).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Class {
    points: Vec<Angle>,
}

pub type Leaf = Class;

impl Class {
    pub fn new(mut points: Vec<Angle>) -> Result<Self, LamError> {
        if points.is_empty() {
            return Err(LamError::EmptyClass);
        }
        points.sort();
        points.dedup();
        Ok(Class { points })
    }

    pub fn leaf(a: Angle, b: Angle) -> Self {
        Class::new(vec![a, b]).unwrap()
    }

    pub fn points(&self) -> &[Angle] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_leaf(&self) -> bool {
        self.points.len() == 2
    }

    pub fn contains(&self, a: Angle) -> bool {
        self.points.binary_search(&a).is_ok()
    }

    /// Image class under angle d-tupling (may collapse).
    pub fn image(&self, d: u32) -> Class {
        Class::new(self.points.iter().map(|&a| sigma(a, d)).collect()).unwrap()
    }

    /// Whether the convex hulls of two classes cross transversally: some
    /// pair of this class's points strictly separates some pair of the
    /// other's on the circle. Shared endpoints do not count as crossing.
    pub fn links(&self, other: &Class) -> bool {
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let (a, b) = (self.points[i], self.points[j]);
                let mut inside = 0usize;
                let mut outside = 0usize;
                for &c in &other.points {
                    if c == a || c == b {
                        continue;
                    }
                    if c.in_open_arc(a, b) {
                        inside += 1;
                    } else {
                        outside += 1;
                    }
                }
                if inside > 0 && outside > 0 {
                    return true;
                }
            }
        }
        false
    }
}

/// Length of a leaf: the circular distance of its endpoints.
pub fn leaf_length(leaf: &Class) -> Result<Rational64, LamError> {
    if !leaf.is_leaf() {
        return Err(LamError::NotALeaf);
    }
    Ok(leaf.points[0].circular_distance(leaf.points[1]))
}

/// A finite chord/class system on the circle with the d-tupling dynamics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteLamination {
    pub degree: u32,
    pub classes: Vec<Class>,
}

impl FiniteLamination {
    pub fn new(degree: u32, classes: Vec<Class>) -> Result<Self, LamError> {
        if degree < 2 {
            return Err(LamError::Invalid("degree must be at least 2".into()));
        }
        Ok(FiniteLamination { degree, classes })
    }

    pub fn angles(&self) -> Vec<Angle> {
        let mut out: Vec<Angle> = self
            .classes
            .iter()
            .flat_map(|c| c.points().iter().copied())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn class_of(&self, a: Angle) -> Option<&Class> {
        self.classes.iter().find(|c| c.contains(a))
    }
}

/// Verdicts for the invariance axioms. `e1` is vacuous for finite systems
/// and recorded as such.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    /// Closedness: finite systems are closed; always true, kept for the
    /// record.
    pub e1_closed_finite: bool,
    /// Unlinked: no two classes cross transversally.
    pub e2_unlinked: bool,
    pub e2_failures: Vec<(usize, usize)>,
    /// Forward invariance: the image of each class is a class of the system
    /// (degenerate singleton images count as implicit classes).
    pub d1_forward: bool,
    pub d1_failures: Vec<usize>,
    /// Backward invariance within the system's angle universe: class images
    /// meeting a class must equal it.
    pub d2_backward: bool,
    pub d2_failures: Vec<(usize, usize)>,
    /// Positive orientation on gaps: complementary arcs map to complementary
    /// arcs in circular order.
    pub d3_orientation: bool,
    pub d3_failures: Vec<usize>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.e2_unlinked && self.d1_forward && self.d2_backward && self.d3_orientation
    }
}

/// Check the invariance axioms of a finite lamination.
pub fn check_invariant(l: &FiniteLamination) -> AxiomReport {
    let d = l.degree;
    let mut report = AxiomReport {
        e1_closed_finite: true,
        e2_unlinked: true,
        e2_failures: Vec::new(),
        d1_forward: true,
        d1_failures: Vec::new(),
        d2_backward: true,
        d2_failures: Vec::new(),
        d3_orientation: true,
        d3_failures: Vec::new(),
    };

    for i in 0..l.classes.len() {
        for j in i + 1..l.classes.len() {
            if l.classes[i].links(&l.classes[j]) {
                report.e2_unlinked = false;
                report.e2_failures.push((i, j));
            }
        }
    }

    for (i, c) in l.classes.iter().enumerate() {
        let img = c.image(d);
        let listed = l.classes.iter().any(|x| x == &img);
        // Singleton images are degenerate classes allowed implicitly, but
        // only if they do not land inside a different listed class.
        let ok = if listed {
            true
        } else if img.len() == 1 {
            let a = img.points()[0];
            l.classes
                .iter()
                .all(|x| !x.contains(a) || x.len() == 1)
        } else {
            false
        };
        if !ok {
            report.d1_forward = false;
            report.d1_failures.push(i);
        }
    }

    // Backward invariance within the angle universe: whenever an angle of
    // the system maps into a class, some class through that angle must map
    // into the class. (Chords may share endpoints, so an angle can lie in
    // several classes.)
    let universe = l.angles();
    for (j, g) in l.classes.iter().enumerate() {
        for &beta in &universe {
            if !g.contains(sigma(beta, d)) {
                continue;
            }
            let carriers: Vec<usize> = l
                .classes
                .iter()
                .enumerate()
                .filter(|(_, h)| h.contains(beta))
                .map(|(i, _)| i)
                .collect();
            if carriers.is_empty() {
                continue; // implicit singleton class: maps into g trivially
            }
            let ok = carriers.iter().any(|&i| {
                l.classes[i]
                    .image(d)
                    .points()
                    .iter()
                    .all(|a| g.contains(*a))
            });
            if !ok {
                report.d2_backward = false;
                report.d2_failures.push((carriers[0], j));
            }
        }
    }

    for (i, c) in l.classes.iter().enumerate() {
        if c.len() < 3 {
            continue;
        }
        if !positively_oriented(c, d) {
            report.d3_orientation = false;
            report.d3_failures.push(i);
        }
    }
    report
}

/// D3 for a gap class: each complementary arc `(s, t)` of the class maps to
/// the complementary arc `(sigma(s), sigma(t))` of the image class.
fn positively_oriented(c: &Class, d: u32) -> bool {
    let img = c.image(d);
    if img.len() == 1 {
        return true; // collapsed gap: orientation is vacuous
    }
    let pts = c.points();
    let n = pts.len();
    for i in 0..n {
        let s = pts[i];
        let t = pts[(i + 1) % n];
        let (is, it) = (sigma(s, d), sigma(t, d));
        if is == it {
            continue;
        }
        // (is, it) must be a complementary arc of the image: consecutive in
        // the image's circular order.
        let ipts = img.points();
        let m = ipts.len();
        let pos = match ipts.binary_search(&is) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if ipts[(pos + 1) % m] != it {
            return false;
        }
    }
    true
}

/// A periodic leaf of a forward-invariant chord set, with its exact period.
pub fn find_periodic_leaf(chords: &[Class], d: u32) -> Result<(Class, usize), LamError> {
    if chords.is_empty() {
        return Err(LamError::NoPeriodicLeaf);
    }
    // Iterate the image map from the first chord; the orbit must cycle
    // within the (finite) set.
    let mut seen: Vec<Class> = Vec::new();
    let mut cur = chords[0].clone();
    loop {
        if let Some(pos) = seen.iter().position(|c| c == &cur) {
            let period = seen.len() - pos;
            return Ok((cur, period));
        }
        if seen.len() > chords.len() + 1 {
            return Err(LamError::NoPeriodicLeaf);
        }
        seen.push(cur.clone());
        let img = cur.image(d);
        if !chords.iter().any(|c| c == &img) {
            return Err(LamError::NoPeriodicLeaf);
        }
        cur = img;
    }
}

/// Preimage refinement to depth `depth`: each round adds, for every class,
/// the grouping of its new preimage angles into unlinked transversal classes
/// (backtracking search; errors when no grouping exists).
pub fn refine(l: &FiniteLamination, depth: u32) -> Result<FiniteLamination, LamError> {
    let mut current = l.clone();
    for _ in 0..depth {
        current = refine_once(&current)?;
    }
    Ok(current)
}

fn refine_once(l: &FiniteLamination) -> Result<FiniteLamination, LamError> {
    let d = l.degree;
    let mut classes = l.classes.clone();
    let snapshot = l.classes.clone();
    for c in &snapshot {
        // All preimage angles of the class's points.
        let mut pre: Vec<Angle> = Vec::new();
        for &g in c.points() {
            for i in 0..d {
                let a = Angle::from_ratio(
                    (g.ratio() + Rational64::from_integer(i as i64))
                        / Rational64::from_integer(d as i64),
                );
                pre.push(a);
            }
        }
        pre.sort();
        pre.dedup();
        // Angles already carried by existing classes keep their classes.
        let fresh: Vec<Angle> = pre
            .into_iter()
            .filter(|&a| !classes.iter().any(|x| x.contains(a)))
            .collect();
        if fresh.is_empty() {
            continue;
        }
        let k = c.len();
        if fresh.len() % k != 0 {
            // Partial absorption: group what remains by image transversals
            // only if it still tiles; otherwise unrefinable.
            if k > 1 {
                return Err(LamError::NotRefinable);
            }
        }
        if k == 1 {
            // Preimages of a singleton are implicit singleton classes.
            continue;
        }
        let groups = group_transversals(&fresh, c, d, &classes).ok_or(LamError::NotRefinable)?;
        for g in groups {
            classes.push(g);
        }
    }
    classes.sort_by(|a, b| a.points().cmp(b.points()));
    classes.dedup();
    FiniteLamination::new(d, classes)
}

/// Partition `fresh` into classes of size |target| mapping bijectively onto
/// `target` with positive orientation, pairwise unlinked and unlinked with
/// everything in `existing`. Backtracking over the circularly sorted list.
fn group_transversals(
    fresh: &[Angle],
    target: &Class,
    d: u32,
    existing: &[Class],
) -> Option<Vec<Class>> {
    let k = target.len();
    if fresh.len() % k != 0 {
        return None;
    }
    let mut remaining: Vec<Angle> = fresh.to_vec();
    let mut groups: Vec<Class> = Vec::new();
    if backtrack(&mut remaining, target, d, existing, &mut groups) {
        Some(groups)
    } else {
        None
    }
}

fn backtrack(
    remaining: &mut Vec<Angle>,
    target: &Class,
    d: u32,
    existing: &[Class],
    groups: &mut Vec<Class>,
) -> bool {
    if remaining.is_empty() {
        return true;
    }
    let k = target.len();
    let seed = remaining[0];
    // Candidate partners: for each image point of the target, the remaining
    // preimages of that point.
    let combos = transversal_candidates(remaining, seed, target, d);
    for combo in combos {
        let class = Class::new(combo.clone()).unwrap();
        if class.len() != k || class.image(d) != *target {
            continue;
        }
        if !positively_oriented(&class, d) {
            continue;
        }
        if existing.iter().any(|e| e.links(&class)) {
            continue;
        }
        if groups.iter().any(|g| g.links(&class)) {
            continue;
        }
        let saved = remaining.clone();
        remaining.retain(|a| !combo.contains(a));
        groups.push(class);
        if backtrack(remaining, target, d, existing, groups) {
            return true;
        }
        groups.pop();
        *remaining = saved;
    }
    false
}

/// All ways to extend `seed` to a transversal of the target's image points
/// using remaining angles.
fn transversal_candidates(
    remaining: &[Angle],
    seed: Angle,
    target: &Class,
    d: u32,
) -> Vec<Vec<Angle>> {
    let k = target.len();
    let img_of_seed = sigma(seed, d);
    if !target.contains(img_of_seed) {
        return Vec::new();
    }
    // Buckets of remaining preimages per target point, excluding the seed's.
    let mut buckets: Vec<Vec<Angle>> = Vec::with_capacity(k - 1);
    for &t in target.points() {
        if t == img_of_seed {
            continue;
        }
        let b: Vec<Angle> = remaining
            .iter()
            .copied()
            .filter(|&a| a != seed && sigma(a, d) == t)
            .collect();
        if b.is_empty() {
            return Vec::new();
        }
        buckets.push(b);
    }
    // Cartesian product (small: at most d^(k-1) with d, k tiny).
    let mut combos: Vec<Vec<Angle>> = vec![vec![seed]];
    for bucket in buckets {
        let mut next = Vec::new();
        for combo in &combos {
            for &a in &bucket {
                let mut c = combo.clone();
                c.push(a);
                next.push(c);
            }
        }
        combos = next;
        if combos.len() > 4096 {
            break;
        }
    }
    combos
}
