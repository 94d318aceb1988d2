//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use crepant::cfrac::{
    bezout_min, dual_expansions, negreg_expand, regular_expand, regular_to_negreg, DualCase,
};
use crepant::cone2d::{boundary_points, dual_pq, kleinian_vertices, PqCone};
use crepant::criterion::TwoParamType;
use crepant::exact::residue;
use crepant::geom::{convex_hull, orient, Vec2};
use crepant::quotient::QuotientType;
use num_integer::Integer;
use num_rational::Ratio;
use rand::Rng;

/// Every valid two-parameter type `1/l(1, …, 1, α, β)` with `r ≤ l ≤ max_l`.
pub fn two_param_types(r: usize, max_l: i64) -> impl Iterator<Item = TwoParamType> {
    let m = r as i64 - 2;
    (r as i64..=max_l)
        .flat_map(move |l| (1..l - m).filter_map(move |a| TwoParamType::with_alpha(r, l, a).ok()))
}

/// Counts `ν·junior simplex ∩ N` by listing integer vectors: each point is
/// `g_j/l + n` with `n ≥ 0` and coordinate sum `ν`.
pub fn enumerate_dilated(t: &QuotientType, nu: i64) -> i64 {
    fn compositions(parts: usize, total: i64) -> i64 {
        if parts == 1 {
            return 1;
        }
        (0..=total)
            .map(|first| compositions(parts - 1, total - first))
            .sum()
    }
    let l = t.order();
    (0..l)
        .map(|j| {
            let frac: i64 = t.weights().iter().map(|w| residue(j * w, l)).sum();
            if frac % l != 0 || frac / l > nu {
                return 0;
            }
            compositions(t.dim(), nu - frac / l)
        })
        .sum()
}

/// Hilbert basis of the simplicial cone spanned by `(0,1,0)`, `(1,0,0)` and
/// `eta` (with `eta[2] > 0`), found from the fundamental parallelepiped.
pub fn hilbert_basis_3d(eta: [i64; 3]) -> Vec<[i64; 3]> {
    let d = eta[2];
    let mut box_pts = Vec::new();
    for z in 0..d {
        // coefficients scaled by d: (y·d − z·η_y, x·d − z·η_x, z)
        let x = Integer::div_ceil(&(z * eta[0]), &d);
        let y = Integer::div_ceil(&(z * eta[1]), &d);
        let lam = [y * d - z * eta[1], x * d - z * eta[0], z];
        if lam != [0, 0, 0] {
            box_pts.push(([x, y, z], lam));
        }
    }
    let mut basis: Vec<[i64; 3]> = vec![[0, 1, 0], [1, 0, 0], eta];
    for (p, lp) in &box_pts {
        let reducible = box_pts
            .iter()
            .any(|(q, lq)| q != p && (0..3).all(|i| lq[i] <= lp[i]));
        if !reducible {
            basis.push(*p);
        }
    }
    basis.sort_unstable();
    basis.dedup();
    basis
}

/// Compact boundary of `conv(pos(a, b) ∩ ℤ² ∖ {0})` for primitive `a`, `b`
/// with `det(a, b) > 0`, from a hull of the lattice points of the triangle
/// `0, a, b`. Returns the boundary lattice points from `a` to `b` and the
/// subset of vertices.
pub fn hull_boundary(a: Vec2, b: Vec2) -> (Vec<Vec2>, Vec<Vec2>) {
    let xs = [0, a[0], b[0]];
    let ys = [0, a[1], b[1]];
    let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let mut pts = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = [x, y];
            if p != [0, 0]
                && orient([0, 0], a, p) >= 0
                && orient(a, b, p) >= 0
                && orient(b, [0, 0], p) >= 0
            {
                pts.push(p);
            }
        }
    }
    let hull = convex_hull(&pts);
    let n = hull.len();
    let start = hull
        .iter()
        .position(|&v| v == a)
        .expect("a is a hull vertex");
    // Walk clockwise (towards the origin side) from a to b.
    let mut vertices = vec![a];
    let mut k = start;
    while hull[k] != b {
        k = (k + n - 1) % n;
        vertices.push(hull[k]);
    }
    let mut boundary = Vec::new();
    for w in vertices.windows(2) {
        let mut seg: Vec<Vec2> = pts
            .iter()
            .copied()
            .filter(|&p| orient(w[0], w[1], p) == 0 && on_between(w[0], w[1], p))
            .collect();
        seg.sort_by_key(|p| (p[0] - w[0][0]).abs() + (p[1] - w[0][1]).abs());
        if !boundary.is_empty() {
            seg.remove(0);
        }
        boundary.extend(seg);
    }
    (boundary, vertices)
}

fn on_between(a: Vec2, b: Vec2, p: Vec2) -> bool {
    (p[0] - a[0]) * (p[0] - b[0]) <= 0 && (p[1] - a[1]) * (p[1] - b[1]) <= 0
}

/// `a₁ + 1/(a₂ + 1/…)` evaluated from the back.
fn eval_regular(a: &[i64]) -> Ratio<i128> {
    let mut x = Ratio::from_integer(*a.last().unwrap() as i128);
    for &e in a.iter().rev().skip(1) {
        x = Ratio::from_integer(e as i128) + x.recip();
    }
    x
}

/// `b₁ − 1/(b₂ − 1/…)` evaluated from the back.
fn eval_negreg(b: &[i64]) -> Ratio<i128> {
    let mut x = Ratio::from_integer(*b.last().unwrap() as i128);
    for &e in b.iter().rev().skip(1) {
        x = Ratio::from_integer(e as i128) - x.recip();
    }
    x
}

pub fn check_pair(k: i64, l: i64) {
    let want = Ratio::new(k as i128, l as i128);
    let reg = regular_expand(k, l).unwrap();
    let neg = negreg_expand(k, l).unwrap();
    assert_eq!(eval_regular(reg.entries()), want, "{k}/{l}");
    assert_eq!(eval_negreg(neg.entries()), want, "{k}/{l}");
    assert!(reg.len() == 1 || *reg.entries().last().unwrap() >= 2);
    assert!(neg.entries().iter().all(|&b| b >= 2));
    assert_eq!(regular_to_negreg(&reg), neg, "{k}/{l}");

    let c = reg.convergents();
    let nu = reg.len() as isize;
    for i in 0..=nu {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        assert_eq!(
            c.num(i) * c.den(i - 1) - c.num(i - 1) * c.den(i),
            sign,
            "{k}/{l} at {i}"
        );
    }
    assert_eq!((c.num(nu), c.den(nu)), (k, l));

    let c = neg.convergents();
    let rho = neg.len() as isize;
    for i in 0..=rho {
        assert_eq!(
            c.num(i - 1) * c.den(i) - c.num(i) * c.den(i - 1),
            1,
            "{k}/{l} at {i}"
        );
    }
    assert_eq!((c.num(rho), c.den(rho)), (k, l));

    let (x, y) = bezout_min(k, l).unwrap();
    assert_eq!(k * x + l * y, 1, "{k}/{l}");
    assert!(x.abs() <= l && y.abs() <= k, "{k}/{l}");
}

pub fn check_duality(q: i64, p: i64) {
    let b = negreg_expand(q, q - p).unwrap();
    let bd = negreg_expand(q, p).unwrap();
    let (rho, t) = (b.len() as i64, bd.len() as i64);
    let sb: i64 = b.entries().iter().sum();
    let sbd: i64 = bd.entries().iter().sum();
    assert_eq!(sb - rho, rho + t - 1, "({p},{q})");
    assert_eq!(sbd - t, rho + t - 1, "({p},{q})");

    let d = dual_expansions(q, p).unwrap();
    let (nu, k) = (d.complement.len(), d.direct.len());
    match d.case {
        DualCase::DirectShorter => assert!(2 * p < q && k + 1 == nu),
        DualCase::DirectLonger => assert!(2 * p > q && k == nu + 1),
        DualCase::SelfDual => assert_eq!((p, q), (1, 2)),
    }
}

/// Checks both compact boundaries of the `(p, q)`-cone against hulls.
pub fn check_cone(p: i64, q: i64) {
    let c = PqCone::new(p, q).unwrap();
    let bp = boundary_points(&c).unwrap();
    let kv = kleinian_vertices(&c).unwrap();

    let (points, vertices) = hull_boundary([1, 0], [p, q]);
    assert_eq!(bp.points, points, "primal points of ({p},{q})");
    let flagged: Vec<Vec2> = bp
        .points
        .iter()
        .zip(&bp.is_vertex)
        .filter(|(_, &v)| v)
        .map(|(&u, _)| u)
        .collect();
    assert_eq!(flagged, vertices, "primal vertices of ({p},{q})");
    assert_eq!(kv.primal, vertices, "kleinian primal of ({p},{q})");

    let (mut points, mut vertices) = hull_boundary([q, -p], [0, 1]);
    points.reverse();
    vertices.reverse();
    let d = dual_pq(&c);
    let dual_points: Vec<Vec2> = boundary_points(&d)
        .unwrap()
        .points
        .into_iter()
        .map(|u| d.to_ambient(u))
        .collect();
    assert_eq!(dual_points, points, "dual points of ({p},{q})");
    assert_eq!(kv.dual, vertices, "kleinian dual of ({p},{q})");
}

/// A random non-basic `(p, q)` with `q ≤ 500`.
pub fn random_cone(rng: &mut impl Rng) -> (i64, i64) {
    loop {
        let q = rng.gen_range(2..=500);
        let p = rng.gen_range(1..q);
        if p.gcd(&q) == 1 {
            return (p, q);
        }
    }
}

/// Whether every irreducible element of the positive orthant in the lattice
/// `ℤ^r + ℤ·(1/l)(w₁, …, w_r)` has age one, comparing all pairs of group points.
pub fn hilbcon_pairwise(l: i64, weights: &[i64]) -> bool {
    let points: Vec<Vec<i64>> = (1..l)
        .map(|j| weights.iter().map(|&w| residue(j * w, l)).collect())
        .collect();
    let below = |a: &Vec<i64>, b: &Vec<i64>| a.iter().zip(b).all(|(x, y)| x <= y);
    points.iter().all(|g| {
        let age = g.iter().sum::<i64>() / l;
        age == 1 || points.iter().any(|h| h != g && below(h, g))
    })
}

/// `1/(4ξ)(1, 1, 2ξ−1, 2ξ−1)`.
pub fn mohri(xi: i64) -> TwoParamType {
    TwoParamType::new(4, 4 * xi, 2 * xi - 1, 2 * xi - 1).unwrap()
}

/// `1/(2(r−1)^i + r−2)(1, …, 1, (r−1)^i, (r−1)^i)`.
pub fn power_series(r: usize, i: u32) -> TwoParamType {
    let a = (r as i64 - 1).pow(i);
    TwoParamType::new(r, 2 * a + r as i64 - 2, a, a).unwrap()
}

/// `1/((ξ+ξ′+1)(r−2))(1, …, 1, ξ(r−2), ξ′(r−2))` for coprime `ξ, ξ′ ≤ 5`.
pub fn common_divisor_family(r: usize) -> Vec<TwoParamType> {
    let m = r as i64 - 2;
    let mut out = Vec::new();
    for xi in 1..=5i64 {
        for xi2 in 1..=5i64 {
            if xi.gcd(&xi2) == 1 {
                out.push(TwoParamType::new(r, (xi + xi2 + 1) * m, xi * m, xi2 * m).unwrap());
            }
        }
    }
    out
}
