//! Explicit crepant resolution fans for two-parameter types.
//!
//! The junior points of `1/l(1, …, 1, α, β)` lie in a rank-3 sublattice and
//! span a lattice polygon. In the plane coordinates used here the vertex
//! `e_{r−1}` is `(0, 0)`, `e_r` is `(1, 0)`, the barycentre of `e₁, …, e_{r−2}`
//! is `(α + r − 2, l)/(r − 2)`, and the lattice is `ℤ²`. A junior point with
//! first coordinate `j/l` sits at `(j − ⌊jβ/l⌋, j)`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::criterion::{decide_two_param, TwoParamType};
use crate::exact::Fraction;
use crate::geom::{boundary_cycle, convex_hull, det2, orient, sub, twice_area, Vec2};
use crate::{Error, Result};

/// The polygon spanned by the junior points of a two-parameter type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonQG {
    #[serde(skip)]
    ty: TwoParamType,
    /// All lattice points, sorted.
    pub points: Vec<Vec2>,
    /// Boundary lattice points, counter-clockwise from `(0, 0)`.
    pub boundary: Vec<Vec2>,
    /// Boundary points facing the barycentre, from the `e_{r−1}` side to the
    /// `e_r` side; empty when the barycentre is itself a lattice point.
    pub w_chain: Vec<Vec2>,
}

impl PolygonQG {
    pub fn ty(&self) -> &TwoParamType {
        &self.ty
    }

    /// The barycentre scaled by `r − 2`.
    pub fn apex_scaled(&self) -> Vec2 {
        [self.ty.alpha() + self.ty.units(), self.ty.l()]
    }

    /// Lifts a plane point to its `l`-scaled coordinates in `ℤ^r`.
    pub fn lift(&self, v: Vec2) -> Vec<i64> {
        let (l, a, b) = (self.ty.l(), self.ty.alpha(), self.ty.beta());
        let [x, y] = v;
        let mut out = vec![y; self.ty.r() - 2];
        out.push(y * a + l * (1 - x));
        out.push(y * b + l * (x - y));
        out
    }

    pub fn twice_area(&self) -> i64 {
        twice_area(&convex_hull(&self.points))
    }

    /// Euclidean area (unit lattice triangle = 1/2).
    pub fn volume(&self) -> Fraction {
        Fraction::new(self.twice_area(), 2)
    }

    pub fn boundary_count(&self) -> i64 {
        self.boundary.len() as i64
    }

    /// Number of chain points strictly between `𝔴` and `𝔴′`.
    pub fn rho(&self) -> Option<i64> {
        (!self.w_chain.is_empty()).then(|| self.w_chain.len() as i64 - 2)
    }

    /// For each chain segment, `|det(w_i − w_{i−1}, apex − (r−2)·w_{i−1})|`;
    /// all equal `gcd(α, β, l)` exactly when the segments span basic cones
    /// with the barycentric ray.
    pub fn chain_dets(&self) -> Vec<i64> {
        let m = self.ty.units();
        let apex = self.apex_scaled();
        self.w_chain
            .windows(2)
            .map(|w| {
                let to_apex = [apex[0] - m * w[0][0], apex[1] - m * w[0][1]];
                det2(sub(w[1], w[0]), to_apex).abs()
            })
            .collect()
    }
}

pub fn build_polygon(t: &TwoParamType) -> PolygonQG {
    let (l, beta) = (t.l(), t.beta());
    let qt = t.quotient_type();
    let mut points = vec![[0, 0], [1, 0]];
    for j in 1..l {
        if qt.group_point(j).age == 1 {
            points.push([j - (j * beta).div_euclid(l), j]);
        }
    }
    points.sort_unstable();
    let boundary = boundary_cycle(&points, [0, 0]);
    let mut poly = PolygonQG {
        ty: *t,
        points,
        boundary,
        w_chain: Vec::new(),
    };
    if t.common_gcd() != t.units() {
        poly.w_chain = chain(&poly);
    }
    poly
}

fn chain(poly: &PolygonQG) -> Vec<Vec2> {
    let [ax, ay] = poly.apex_scaled();
    let m = poly.ty.units();
    let on_right = |p: Vec2| (ax - m) * p[1] - ay * (p[0] - 1) == 0;
    let on_left = |p: Vec2| ax * p[1] - ay * p[0] == 0;
    let b = &poly.boundary;
    let mut i1 = 1;
    while i1 + 1 < b.len() && on_right(b[i1 + 1]) {
        i1 += 1;
    }
    let mut i0 = b.len() - 1;
    while i0 > i1 && on_left(b[i0 - 1]) && b[i0 - 1] != [0, 0] {
        i0 -= 1;
    }
    if !on_left(b[i0]) {
        i0 = 0;
    }
    let mut w: Vec<Vec2> = if i0 == 0 {
        let mut v = b[i1..].to_vec();
        v.push(b[0]);
        v
    } else {
        b[i1..=i0].to_vec()
    };
    w.reverse();
    w
}

/// A triangulation by indices into [`PolygonQG::points`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Whether every triangle has twice-area 1.
    pub fn is_unimodular(&self, points: &[Vec2]) -> bool {
        self.triangles
            .iter()
            .all(|&[a, b, c]| orient(points[a], points[b], points[c]).abs() == 1)
    }
}

/// A triangulation using every lattice point of the polygon as a vertex:
/// fan the hull corners, then insert the remaining points in sorted order,
/// splitting the containing triangle or the triangles on the containing edge.
pub fn triangulate_polygon_max(poly: &PolygonQG) -> Triangulation {
    let pts = &poly.points;
    let index: HashMap<Vec2, usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let hull: Vec<usize> = convex_hull(pts).iter().map(|p| index[p]).collect();
    let mut tris: Vec<[usize; 3]> = (1..hull.len().saturating_sub(1))
        .map(|k| [hull[0], hull[k], hull[k + 1]])
        .collect();
    let corners: BTreeSet<usize> = hull.iter().copied().collect();
    for (pi, &p) in pts.iter().enumerate() {
        if corners.contains(&pi) {
            continue;
        }
        let mut located = None;
        for (ti, t) in tris.iter().enumerate() {
            let o = [
                orient(pts[t[0]], pts[t[1]], p),
                orient(pts[t[1]], pts[t[2]], p),
                orient(pts[t[2]], pts[t[0]], p),
            ];
            if o.iter().all(|&x| x >= 0) {
                located = Some((ti, o));
                break;
            }
        }
        let (ti, o) = located.expect("polygon point lies in some triangle");
        let [a, b, c] = tris[ti];
        match o.iter().position(|&x| x == 0) {
            None => {
                tris[ti] = [a, b, pi];
                tris.push([b, c, pi]);
                tris.push([c, a, pi]);
            }
            Some(e) => {
                // Edge (u, v) of triangle (u, v, w), rotated so the edge comes first.
                let rot = [[a, b, c], [b, c, a], [c, a, b]][e];
                let [u, v, w] = rot;
                let neighbour = tris
                    .iter()
                    .position(|t| t.contains(&u) && t.contains(&v) && !t.contains(&w));
                tris[ti] = [u, pi, w];
                tris.push([pi, v, w]);
                if let Some(nj) = neighbour {
                    let x = *tris[nj].iter().find(|&&k| k != u && k != v).unwrap();
                    tris[nj] = [v, pi, x];
                    tris.push([pi, u, x]);
                }
            }
        }
    }
    Triangulation { triangles: tris }
}

/// Generators (scaled by `l`) and maximal cones of a simplicial fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JuniorFan {
    pub scale: i64,
    pub generators: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
}

/// Joins every triangle with each `(r−3)`-subset of `e₁, …, e_{r−2}`, and,
/// when the barycentre is not a lattice point, each chain segment with all
/// of `e₁, …, e_{r−2}`. Refuses types that are not resolvable.
pub fn build_join_fan(
    t: &TwoParamType,
    poly: &PolygonQG,
    tri: &Triangulation,
) -> Result<JuniorFan> {
    if !decide_two_param(t).resolvable() {
        return Err(Error::NotResolvable);
    }
    Ok(join_fan_unchecked(poly, tri))
}

/// The same construction without the resolvability check.
pub fn join_fan_unchecked(poly: &PolygonQG, tri: &Triangulation) -> JuniorFan {
    let t = poly.ty();
    let (r, l) = (t.r(), t.l());
    let units = r - 2;
    let mut generators: Vec<Vec<i64>> = (0..units)
        .map(|i| (0..r).map(|k| if k == i { l } else { 0 }).collect())
        .collect();
    generators.extend(poly.points.iter().map(|&p| poly.lift(p)));
    let mut cones = Vec::new();
    for tr in &tri.triangles {
        for omit in 0..units {
            let mut c: Vec<usize> = (0..units).filter(|&i| i != omit).collect();
            c.extend(tr.iter().map(|&k| k + units));
            cones.push(c);
        }
    }
    let index: HashMap<Vec2, usize> = poly
        .points
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    for w in poly.w_chain.windows(2) {
        let mut c: Vec<usize> = (0..units).collect();
        c.push(index[&w[0]] + units);
        c.push(index[&w[1]] + units);
        cones.push(c);
    }
    JuniorFan {
        scale: l,
        generators,
        maximal_cones: cones,
    }
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .zip(a[i][k].checked_mul(a[k][j]))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::Overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Outcome of checking a fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    /// Every maximal cone has lattice determinant 1.
    pub basic: bool,
    /// Every generator lies on the junior hyperplane.
    pub crepant: bool,
    /// Normalized volumes of the maximal simplices add up to the order.
    pub covering: bool,
    /// Cones sharing a facet lie on opposite sides of it, at most two per facet.
    pub compatible: bool,
    pub volume: Fraction,
    pub expected_volume: i64,
    pub failures: Vec<String>,
}

impl FanReport {
    pub fn passed(&self) -> bool {
        self.basic && self.crepant && self.covering && self.compatible
    }
}

fn cone_rows(fan: &JuniorFan, cone: &[usize]) -> Vec<Vec<i64>> {
    cone.iter().map(|&g| fan.generators[g].clone()).collect()
}

/// Checks basicness, crepancy, volume covering and facet compatibility.
/// In `l`-scaled coordinates a cone is basic iff `|det| = l^{r−1}`.
pub fn verify_fan(fan: &JuniorFan) -> Result<FanReport> {
    let l = fan.scale;
    let r = fan.generators.first().map_or(0, Vec::len);
    let unit = (l as i128)
        .checked_pow(r as u32 - 1)
        .ok_or(Error::Overflow)?;
    let mut failures = Vec::new();
    let crepant = fan.generators.iter().enumerate().all(|(i, g)| {
        let ok = g.iter().sum::<i64>() == l && g.iter().all(|&x| x >= 0);
        if !ok {
            failures.push(format!("generator {i} = {g:?} is not junior"));
        }
        ok
    });
    let mut basic = true;
    let mut total: i128 = 0;
    for (ci, cone) in fan.maximal_cones.iter().enumerate() {
        let d = determinant(&cone_rows(fan, cone))?.abs();
        total += d;
        if d != unit {
            basic = false;
            failures.push(format!("cone {ci} {cone:?}: |det| = {d}, expected {unit}"));
        }
    }
    let volume = Fraction::new(i64::try_from(total / unit).map_err(|_| Error::Overflow)?, 1);
    let covering = total % unit == 0 && volume == Fraction::integer(l);
    if !covering {
        failures.push(format!("volume sum {total}/{unit} differs from {l}"));
    }
    let mut facets: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (ci, cone) in fan.maximal_cones.iter().enumerate() {
        for &g in cone {
            let mut f: Vec<usize> = cone.iter().copied().filter(|&x| x != g).collect();
            f.sort_unstable();
            facets.entry(f).or_default().push((ci, g));
        }
    }
    let mut compatible = true;
    for (f, owners) in &facets {
        match owners.as_slice() {
            [_] => {}
            [(c1, g1), (c2, g2)] => {
                let side = |g: usize| -> Result<i128> {
                    let mut rows = cone_rows(fan, f);
                    rows.push(fan.generators[g].clone());
                    Ok(determinant(&rows)?.signum())
                };
                if side(*g1)? * side(*g2)? >= 0 {
                    compatible = false;
                    failures.push(format!("cones {c1} and {c2} overlap across facet {f:?}"));
                }
            }
            _ => {
                compatible = false;
                failures.push(format!("facet {f:?} lies in {} cones", owners.len()));
            }
        }
    }
    Ok(FanReport {
        basic,
        crepant,
        covering,
        compatible,
        volume,
        expected_volume: l,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(r: usize, l: i64, a: i64) -> TwoParamType {
        TwoParamType::with_alpha(r, l, a).unwrap()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 3]]).unwrap(), 5);
        assert_eq!(
            determinant(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap(),
            -1
        );
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]).unwrap(), 0);
    }

    #[test]
    fn polygon_of_eight() {
        let t = tp(4, 8, 2);
        let poly = build_polygon(&t);
        assert!(poly.w_chain.is_empty());
        assert_eq!(poly.volume(), Fraction::integer(2));
        let tri = triangulate_polygon_max(&poly);
        assert_eq!(tri.triangles.len(), 4);
        assert!(tri.is_unimodular(&poly.points));
        let fan = build_join_fan(&t, &poly, &tri).unwrap();
        assert_eq!(fan.maximal_cones.len(), 8);
        assert!(verify_fan(&fan).unwrap().passed());
    }

    #[test]
    fn polygon_of_eleven() {
        let t = tp(4, 11, 3);
        let poly = build_polygon(&t);
        assert_eq!(poly.rho(), Some(2));
        assert_eq!(poly.w_chain.first(), Some(&[0, 0]));
        assert_eq!(poly.w_chain.last(), Some(&[1, 0]));
        assert_eq!(poly.volume(), Fraction::integer(2));
        assert_eq!(poly.chain_dets(), vec![1, 1, 1]);
        let tri = triangulate_polygon_max(&poly);
        assert!(tri.is_unimodular(&poly.points));
        let fan = build_join_fan(&t, &poly, &tri).unwrap();
        assert_eq!(fan.maximal_cones.len(), 2 * tri.triangles.len() + 3);
        let report = verify_fan(&fan).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn dropping_a_chain_cone_breaks_covering() {
        let t = tp(4, 11, 3);
        let poly = build_polygon(&t);
        let tri = triangulate_polygon_max(&poly);
        let mut fan = build_join_fan(&t, &poly, &tri).unwrap();
        fan.maximal_cones.pop();
        let report = verify_fan(&fan).unwrap();
        assert!(!report.covering);
        assert!(report.basic && report.crepant);
    }

    #[test]
    fn refuses_unresolvable() {
        let t = tp(4, 9, 2);
        let poly = build_polygon(&t);
        let tri = triangulate_polygon_max(&poly);
        if !decide_two_param(&t).resolvable() {
            assert!(matches!(
                build_join_fan(&t, &poly, &tri),
                Err(Error::NotResolvable)
            ));
        }
    }
}
