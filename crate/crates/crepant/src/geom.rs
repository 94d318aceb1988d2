//! Integer plane geometry: orientation, convex hulls, boundary lattice points.

/// An integer point or vector in the plane.
pub type Vec2 = [i64; 2];

pub fn det2(a: Vec2, b: Vec2) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

pub fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

/// Twice the signed area of the triangle `o, a, b`.
pub fn orient(o: Vec2, a: Vec2, b: Vec2) -> i64 {
    det2(sub(a, o), sub(b, o))
}

/// Whether `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: Vec2, b: Vec2, p: Vec2) -> bool {
    orient(a, b, p) == 0
        && p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

/// Strict vertices of the convex hull, counter-clockwise, starting from the
/// lexicographically smallest point. Collinear points are dropped.
pub fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Vec2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// All given points lying on the hull boundary, in counter-clockwise cyclic
/// order starting at `start` (which must be a hull vertex).
pub fn boundary_cycle(points: &[Vec2], start: Vec2) -> Vec<Vec2> {
    let hull = convex_hull(points);
    let n = hull.len();
    let first = hull.iter().position(|&v| v == start).unwrap_or(0);
    let mut cycle = Vec::new();
    for k in 0..n {
        let a = hull[(first + k) % n];
        let b = hull[(first + k + 1) % n];
        let mut on_edge: Vec<Vec2> = points
            .iter()
            .copied()
            .filter(|&p| p != b && on_segment(a, b, p))
            .collect();
        on_edge.sort_unstable_by_key(|p| (p[0] - a[0]).abs() + (p[1] - a[1]).abs());
        on_edge.dedup();
        cycle.extend(on_edge);
    }
    cycle
}

/// Twice the (signed) area of a polygon given as a vertex cycle.
pub fn twice_area(poly: &[Vec2]) -> i64 {
    let n = poly.len();
    (0..n).map(|i| det2(poly[i], poly[(i + 1) % n])).sum()
}
