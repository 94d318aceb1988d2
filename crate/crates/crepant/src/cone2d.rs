//! Two-dimensional rational cones in `(p, q)` normal form.
//!
//! A `(p, q)`-cone is `pos(y₁, p·y₁ + q·y₂)` for a lattice basis `(y₁, y₂)`
//! with `0 ≤ p < q` coprime. Points returned by [`boundary_points`] and
//! [`kleinian_vertices`] are in adapted coordinates (coefficients of `y₁, y₂`);
//! dual-side points are in the coordinates of the dual basis `(m₁, m₂)`.

use num_integer::Integer;
use serde::Serialize;

use crate::cfrac::{negreg_expand, regular_expand};
use crate::exact::residue;
use crate::geom::{det2, Vec2};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PqCone {
    p: i64,
    q: i64,
    /// Adapted basis `y₁, y₂` in ambient coordinates.
    basis: [Vec2; 2],
}

impl PqCone {
    /// A `(p, q)`-cone with the standard basis as adapted basis.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let ok = q >= 1 && (0..q).contains(&p) && p.gcd(&q) == 1;
        if !ok {
            return Err(Error::FractionOutOfRange { num: q, den: p });
        }
        Ok(PqCone {
            p,
            q,
            basis: [[1, 0], [0, 1]],
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn basis(&self) -> [Vec2; 2] {
        self.basis
    }

    pub fn is_basic(&self) -> bool {
        self.q == 1
    }

    /// Primitive generators `n₁ = y₁`, `n₂ = p·y₁ + q·y₂` in ambient coordinates.
    pub fn generators(&self) -> [Vec2; 2] {
        [self.basis[0], self.to_ambient([self.p, self.q])]
    }

    /// Maps adapted coordinates to ambient coordinates.
    pub fn to_ambient(&self, v: Vec2) -> Vec2 {
        let [y1, y2] = self.basis;
        [v[0] * y1[0] + v[1] * y2[0], v[0] * y1[1] + v[1] * y2[1]]
    }

    /// Maps ambient coordinates to adapted coordinates.
    pub fn from_ambient(&self, v: Vec2) -> Vec2 {
        let [y1, y2] = self.basis;
        let d = det2(y1, y2);
        [det2(v, y2) / d, det2(y1, v) / d]
    }
}

/// Normal form of `pos(n₁, n₂)` in the standard lattice `ℤ²`.
pub fn pq_normal_form(n1: Vec2, n2: Vec2) -> Result<PqCone> {
    for v in [n1, n2] {
        if v[0].gcd(&v[1]) != 1 {
            return Err(Error::NotPrimitive(v[0], v[1]));
        }
    }
    let d = det2(n1, n2);
    if d == 0 {
        return Err(Error::Parallel);
    }
    // Complete n₁ to a basis with det(n₁, y) = 1.
    let e = n1[0].extended_gcd(&n1[1]);
    let mut y2 = [-e.y * e.gcd, e.x * e.gcd];
    let q = d.abs();
    if d < 0 {
        y2 = [-y2[0], -y2[1]];
    }
    // n₂ = λ₁·n₁ + q·y₂; shift y₂ so that λ₁ lands in [0, q).
    let lambda1 = det2(n2, y2) / det2(n1, y2);
    let p = residue(lambda1, q);
    let k = (lambda1 - p) / q;
    let y2 = [y2[0] + k * n1[0], y2[1] + k * n1[1]];
    Ok(PqCone {
        p,
        q,
        basis: [n1, y2],
    })
}

/// Inverse of `p` modulo `q` via the extended Euclidean algorithm.
pub fn socius(p: i64, q: i64) -> Result<i64> {
    if q == 1 && p == 0 {
        return Ok(0);
    }
    if p <= 0 || p >= q || p.gcd(&q) != 1 {
        return Err(Error::FractionOutOfRange { num: q, den: p });
    }
    let e = p.extended_gcd(&q);
    Ok(residue(e.x, q))
}

/// Inverse of `p` modulo `q` via the sum `3 − 2p + 6·Σ_{j<p} ⌊jq/p⌋²`.
pub fn socius_voronoi(p: i64, q: i64) -> Result<i64> {
    if p <= 0 || p >= q || p.gcd(&q) != 1 {
        return Err(Error::FractionOutOfRange { num: q, den: p });
    }
    let (p, q) = (p as i128, q as i128);
    let sum: i128 = (1..p).map(|j| (j * q / p).pow(2)).sum();
    Ok((3 - 2 * p + 6 * sum).rem_euclid(q) as i64)
}

/// Two germs are isomorphic iff `q` agrees and `p` agrees up to the socius.
pub fn cones_isomorphic(a: &PqCone, b: &PqCone) -> bool {
    if a.q != b.q {
        return false;
    }
    a.p == b.p || socius(b.p, b.q).is_ok_and(|s| s == a.p)
}

/// The dual cone in dual coordinates: a `(q−p, q)`-cone with adapted basis
/// `m₂, m₁ − m₂` (or `m₂, m₁` when the cone is basic).
pub fn dual_pq(c: &PqCone) -> PqCone {
    if c.is_basic() {
        return PqCone {
            p: 0,
            q: 1,
            basis: [[0, 1], [1, 0]],
        };
    }
    PqCone {
        p: c.q - c.p,
        q: c.q,
        basis: [[0, 1], [1, -1]],
    }
}

/// Lattice points on the compact part of the boundary of `conv(σ ∩ N∖{0})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryPoints {
    /// `u₀ = y₁, …, u_{ρ+1} = n₂` in adapted coordinates.
    pub points: Vec<Vec2>,
    pub is_vertex: Vec<bool>,
}

/// Boundary points from the negative-regular expansion `q/(q−p) = [[b₁, …, b_ρ]]`:
/// `u_j = (R_{j−1} − S_{j−1})·y₁ + R_{j−1}·y₂`; `u_j` is a vertex unless `b_j = 2`.
pub fn boundary_points(c: &PqCone) -> Result<BoundaryPoints> {
    if c.is_basic() {
        return Err(Error::BasicCone);
    }
    let cf = negreg_expand(c.q, c.q - c.p)?;
    let conv = cf.convergents();
    let rho = cf.len() as isize;
    let points = (0..=rho + 1)
        .map(|j| {
            let (r, s) = (conv.num(j - 1), conv.den(j - 1));
            [r - s, r]
        })
        .collect();
    let mut is_vertex = vec![true];
    is_vertex.extend(cf.entries().iter().map(|&b| b != 2));
    is_vertex.push(true);
    Ok(BoundaryPoints { points, is_vertex })
}

/// Kleinian approximants and the vertices they determine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleinianVertices {
    /// `v₀ = y₁, v₁ = y₂, v_i = a_{i−1}·v_{i−1} + v_{i−2}` from `q/p = [a₁, …, a_k]`.
    pub approximants: Vec<Vec2>,
    /// Vertices of the primal compact boundary (adapted coordinates).
    pub primal: Vec<Vec2>,
    /// Dual approximants from `q/(q−p)` in `(m₁, m₂)` coordinates.
    pub dual_approximants: Vec<Vec2>,
    /// Vertices of the dual compact boundary in `(m₁, m₂)` coordinates.
    pub dual: Vec<Vec2>,
}

fn approximants(start: [Vec2; 2], entries: &[i64]) -> Vec<Vec2> {
    let mut v = start.to_vec();
    for &a in entries {
        let n = v.len();
        v.push([a * v[n - 1][0] + v[n - 2][0], a * v[n - 1][1] + v[n - 2][1]]);
    }
    v
}

fn even_vertices(v: &[Vec2]) -> Vec<Vec2> {
    let last = v.len() - 1;
    let mut out: Vec<Vec2> = (0..last).step_by(2).map(|i| v[i]).collect();
    out.push(v[last]);
    out
}

/// Vertices of both compact boundaries via Kleinian approximation.
pub fn kleinian_vertices(c: &PqCone) -> Result<KleinianVertices> {
    if c.is_basic() {
        return Err(Error::BasicCone);
    }
    let direct = regular_expand(c.q, c.p)?;
    let complement = regular_expand(c.q, c.q - c.p)?;
    let approximants = approximants([[1, 0], [0, 1]], direct.entries());
    let dual_approximants = approximants_dual(complement.entries());
    Ok(KleinianVertices {
        primal: even_vertices(&approximants),
        dual: even_vertices(&dual_approximants),
        approximants,
        dual_approximants,
    })
}

fn approximants_dual(entries: &[i64]) -> Vec<Vec2> {
    approximants([[0, 1], [1, -1]], entries)
}

/// Minimal generating set of the monoid `σ ∩ N` (adapted coordinates).
pub fn hilbert_basis_2d(c: &PqCone) -> Vec<Vec2> {
    if c.is_basic() {
        return vec![[1, 0], [0, 1]];
    }
    boundary_points(c).map(|b| b.points).unwrap_or_default()
}
