//! Cyclic quotient types `1/l(α₁, …, α_r)`, their group-element lattice
//! points, ages and brute-force Hilbert bases.
//!
//! Lattice points of `N = ℤ^r + ℤ·(1/l)(α₁, …, α_r)` are stored scaled by `l`.

use num_integer::Integer;
use serde::Serialize;

use crate::exact::residue;
use crate::{Error, Result};

/// Default bound on pairwise comparisons in brute-force Hilbert basis work.
pub const DEFAULT_GUARD: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientType {
    order: i64,
    weights: Vec<i64>,
}

/// The lattice point of a group element, scaled by the group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPoint {
    pub index: i64,
    pub coords: Vec<i64>,
    pub age: i64,
}

impl QuotientType {
    /// Weights are reduced modulo `l`; requires `l ≥ 2` and `r ≥ 2`.
    pub fn new(order: i64, weights: Vec<i64>) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidType(format!("order {order} < 2")));
        }
        if weights.len() < 2 {
            return Err(Error::InvalidType("fewer than two weights".into()));
        }
        let weights = weights.into_iter().map(|a| residue(a, order)).collect();
        Ok(QuotientType { order, weights })
    }

    /// `1/l(1, …, 1, l − (r−1))`.
    pub fn one_param(r: usize, l: i64) -> Result<Self> {
        if r < 2 || l < r as i64 {
            return Err(Error::InvalidType(format!(
                "need l >= r >= 2, got r={r}, l={l}"
            )));
        }
        let mut w = vec![1; r - 1];
        w.push(l - (r as i64 - 1));
        QuotientType::new(l, w)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `gcd(l, α₁, …, α̂_i, …, α_r) = 1` for every `i`.
    pub fn is_small(&self) -> bool {
        (0..self.dim()).all(|i| {
            self.weights
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(self.order, |g, (_, &a)| g.gcd(&a))
                == 1
        })
    }

    pub fn is_gorenstein(&self) -> bool {
        self.weights.iter().sum::<i64>() % self.order == 0
    }

    /// Splitting codimension (number of non-zero weights) and isolatedness.
    pub fn splitting_codim(&self) -> (usize, bool) {
        let codim = self.weights.iter().filter(|&&a| a != 0).count();
        let isolated = codim == self.dim() && self.weights.iter().all(|a| a.gcd(&self.order) == 1);
        (codim, isolated)
    }

    /// Largest number of coinciding weights.
    pub fn max_equal_weights(&self) -> usize {
        self.weights
            .iter()
            .map(|a| self.weights.iter().filter(|&b| b == a).count())
            .max()
            .unwrap_or(0)
    }

    pub fn group_point(&self, j: i64) -> GroupPoint {
        let coords: Vec<i64> = self
            .weights
            .iter()
            .map(|&a| residue(j * a, self.order))
            .collect();
        let age = coords.iter().sum::<i64>() / self.order;
        GroupPoint {
            index: residue(j, self.order),
            coords,
            age,
        }
    }

    /// The `l` points `(1/l)([jα₁]_l, …, [jα_r]_l)`, `j = 0, …, l−1`.
    pub fn group_points(&self) -> Result<Vec<GroupPoint>> {
        if !self.is_gorenstein() {
            return Err(Error::NotGorenstein);
        }
        Ok((0..self.order).map(|j| self.group_point(j)).collect())
    }

    /// Number of group elements of each age `0, …, r−1`.
    pub fn age_histogram(&self) -> Result<Vec<i64>> {
        let mut hist = vec![0; self.dim()];
        for g in self.group_points()? {
            hist[g.age as usize] += 1;
        }
        Ok(hist)
    }
}

/// Whether the types agree up to a permutation and a unit multiplier.
pub fn types_equivalent(a: &QuotientType, b: &QuotientType) -> bool {
    if a.order != b.order || a.dim() != b.dim() {
        return false;
    }
    let mut target = b.weights.clone();
    target.sort_unstable();
    (1..a.order).filter(|u| u.gcd(&a.order) == 1).any(|u| {
        let mut w: Vec<i64> = a.weights.iter().map(|&x| residue(u * x, a.order)).collect();
        w.sort_unstable();
        w == target
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertBasisReport {
    /// Elements are given scaled by this factor (the group order).
    pub scale: i64,
    pub elements: Vec<Vec<i64>>,
    pub all_junior: bool,
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Hilbert basis of the positive orthant w.r.t. the weight lattice: unit
/// vectors plus the group points not dominating another non-zero group point.
pub fn hilbert_basis_bruteforce(t: &QuotientType, guard: u64) -> Result<HilbertBasisReport> {
    let points = t.group_points()?;
    let nonzero: Vec<&GroupPoint> = points.iter().filter(|g| g.index != 0).collect();
    let needed = (nonzero.len() as u64).pow(2);
    if needed > guard {
        return Err(Error::GuardExceeded {
            needed,
            limit: guard,
        });
    }
    let l = t.order;
    let mut elements: Vec<Vec<i64>> = (0..t.dim())
        .map(|i| (0..t.dim()).map(|k| if k == i { l } else { 0 }).collect())
        .collect();
    let mut all_junior = true;
    for g in &nonzero {
        let reducible = nonzero
            .iter()
            .any(|h| h.index != g.index && leq(&h.coords, &g.coords));
        if !reducible {
            all_junior &= g.age == 1;
            elements.push(g.coords.clone());
        }
    }
    Ok(HilbertBasisReport {
        scale: l,
        elements,
        all_junior,
    })
}

/// Whether every Hilbert basis element is junior. Processes points by age:
/// as long as all irreducibles seen so far are junior, a point is reducible
/// iff it dominates a junior point.
pub fn hilbcon_check(t: &QuotientType, guard: u64) -> Result<bool> {
    let points = t.group_points()?;
    let juniors: Vec<&GroupPoint> = points.iter().filter(|g| g.age == 1).collect();
    let seniors: Vec<&GroupPoint> = points.iter().filter(|g| g.age >= 2).collect();
    let needed = juniors.len() as u64 * seniors.len() as u64;
    if needed > guard {
        return Err(Error::GuardExceeded {
            needed,
            limit: guard,
        });
    }
    Ok(seniors
        .iter()
        .all(|g| juniors.iter().any(|h| leq(&h.coords, &g.coords))))
}
