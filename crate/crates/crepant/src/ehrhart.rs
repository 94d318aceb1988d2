//! Ehrhart polynomials of junior simplices and the cohomology dimensions
//! they determine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::criterion::{characteristic_numbers, decide_two_param, TwoParamType};
use crate::exact::{big, binomial, rational_string, residue, to_i64, Fraction, Poly};
use crate::fan::{build_polygon, PolygonQG};
use crate::quotient::QuotientType;
use crate::{Error, Result};

/// Signed Stirling number of the first kind: the coefficient of `x^k` in
/// the falling factorial `x(x−1)⋯(x−n+1)`.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * BigInt::from(m);
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

/// The matrix `M_d` with `a = δ·M_dᵀ`; entry `(i, j)` is the coefficient of
/// `ν^i` in `binom(ν + d − j, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl TransferMatrix {
    pub fn new(d: usize) -> Self {
        let fact: BigInt = (1..=d).map(BigInt::from).product();
        let entries = (0..=d)
            .map(|i| {
                (0..=d)
                    .map(|j| {
                        let mut acc = BigInt::zero();
                        for xi in i..=d {
                            let shift = BigInt::from(d - j).pow((xi - i) as u32);
                            acc += stirling1(d, xi)
                                * BigInt::from(binomial(xi as i64, i as i64))
                                * shift;
                        }
                        BigRational::new(acc, fact.clone())
                    })
                    .collect()
            })
            .collect();
        TransferMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    /// Solves `M x = b` exactly.
    fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>> {
        let n = self.entries.len();
        let mut m: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::Inconsistent("singular transfer matrix".into()))?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            let pivot: Vec<BigRational> = m[col].iter().map(|x| x / &p).collect();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                        *x -= y * &f;
                    }
                }
            }
            m[col] = pivot;
        }
        Ok(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
    }
}

/// Ehrhart polynomial `Σ a_i ν^i` of a lattice polytope of dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPoly {
    poly: Poly,
    dim: usize,
}

impl EhrhartPoly {
    pub fn new(poly: Poly, dim: usize) -> Result<Self> {
        if poly.degree() != Some(dim) || poly.coeff(0) != BigRational::one() {
            return Err(Error::Inconsistent(format!(
                "not an Ehrhart polynomial of dimension {dim}: {:?}",
                poly.coeffs()
                    .iter()
                    .map(rational_string)
                    .collect::<Vec<_>>()
            )));
        }
        Ok(EhrhartPoly { poly, dim })
    }

    /// Interpolates lattice-point counts at `ν = 1..=dim + 1`.
    pub fn from_counts(counts: &[i64]) -> Result<Self> {
        let nodes: Vec<_> = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (big(i as i64 + 1), big(c)))
            .collect();
        EhrhartPoly::new(Poly::interpolate(&nodes), counts.len() - 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> Vec<BigRational> {
        (0..=self.dim).map(|i| self.poly.coeff(i)).collect()
    }

    pub fn leading(&self) -> BigRational {
        self.poly.coeff(self.dim)
    }

    pub fn eval(&self, nu: i64) -> BigRational {
        self.poly.eval(&big(nu))
    }
}

impl Serialize for EhrhartPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.coefficients();
        let mut seq = s.serialize_seq(Some(coeffs.len()))?;
        for c in &coeffs {
            seq.serialize_element(&rational_string(c))?;
        }
        seq.end()
    }
}

/// The δ-vector `(δ₀, …, δ_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaVector(pub Vec<i64>);

impl DeltaVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// `δ = a·(M_dᵀ)⁻¹`; fails unless every entry is a non-negative integer.
pub fn delta_from_a(e: &EhrhartPoly) -> Result<DeltaVector> {
    let m = TransferMatrix::new(e.dim());
    let delta = m.solve(&e.coefficients())?;
    delta
        .iter()
        .map(|x| match to_i64(x) {
            Some(v) if v >= 0 => Ok(v),
            _ => Err(Error::Inconsistent(format!(
                "delta entry {}",
                rational_string(x)
            ))),
        })
        .collect::<Result<Vec<_>>>()
        .map(DeltaVector)
}

/// The planar quantities entering the join polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanarData {
    pub lattice_points: i64,
    pub volume: Fraction,
    pub boundary_points: i64,
}

impl PlanarData {
    /// Data of the lattice polygon spanned by the junior points.
    pub fn of_polygon(poly: &PolygonQG) -> Self {
        PlanarData {
            lattice_points: poly.points.len() as i64,
            volume: poly.volume(),
            boundary_points: poly.boundary_count(),
        }
    }

    /// Data of the (possibly non-lattice) triangle with the barycentre as apex.
    pub fn of_junior_triangle(poly: &PolygonQG) -> Self {
        let [ax, ay] = poly.apex_scaled();
        let m = poly.ty().units();
        let on_edge = |p: &&[i64; 2]| {
            p[1] == 0 || ax * p[1] == ay * p[0] || (ax - m) * p[1] == ay * (p[0] - 1)
        };
        PlanarData {
            lattice_points: poly.points.len() as i64,
            volume: Fraction::new(poly.ty().l(), 2 * m),
            boundary_points: poly.points.iter().filter(on_edge).count() as i64,
        }
    }

    fn volume_big(&self) -> BigRational {
        BigRational::new(self.volume.num().into(), self.volume.den().into())
    }
}

/// `Vol·ν² + (b/2)·ν + 1`.
pub fn pick_polygon(poly: &PolygonQG) -> EhrhartPoly {
    let d = PlanarData::of_polygon(poly);
    let coeffs = vec![
        BigRational::one(),
        BigRational::new(d.boundary_points.into(), 2.into()),
        d.volume_big(),
    ];
    EhrhartPoly::new(Poly::from_coeffs(coeffs), 2).expect("a polygon has positive area")
}

/// Closed forms for the area and boundary count of the junior polygon:
/// `l/(2(r−2))` and `gcd(α/(r−2) + 1, l/(r−2)) + gcd(α/(r−2), l/(r−2)) + 1`
/// when the barycentre is a lattice point, otherwise
/// `(l − ρ − 1)/(2(r−2))` and `ρ + ⌊t₁/(r−2)⌋ + ⌊t₂/(r−2)⌋ + 2`.
/// Only valid for resolvable types.
pub fn closed_form_polygon(t: &TwoParamType) -> Result<(Fraction, i64)> {
    use num_integer::Integer;
    if !decide_two_param(t).resolvable() {
        return Err(Error::NotResolvable);
    }
    let (l, a, m) = (t.l(), t.alpha(), t.units());
    if t.common_gcd() == m {
        let vol = Fraction::new(l, 2 * m);
        let b = (a / m + 1).gcd(&(l / m)) + (a / m).gcd(&(l / m)) + 1;
        return Ok((vol, b));
    }
    let cn = characteristic_numbers(t)?;
    let rho = cn.rho();
    Ok((
        Fraction::new(l - rho - 1, 2 * m),
        rho + cn.t1 / m + cn.t2 / m + 2,
    ))
}

fn binom_nu_minus_one(j: i64) -> Poly {
    Poly::binomial_in(-1, j)
}

/// `B(i; ν) = Σ_{j=0}^{i+2} C(ν−1, j)·{C(i, j+1) + f₀C(i, j) + (3V + b/2)C(i, j−1) + 2V·C(i, j−2)}`.
pub fn bpoly(i: i64, data: &PlanarData) -> Poly {
    let f0 = big(data.lattice_points);
    let vol = data.volume_big();
    let f1 = &vol * big(3) + BigRational::new(data.boundary_points.into(), 2.into());
    let f2 = &vol * big(2);
    let mut acc = Poly::zero();
    for j in 0..=i + 2 {
        let c = big(binomial(i, j + 1))
            + &f0 * big(binomial(i, j))
            + &f1 * big(binomial(i, j - 1))
            + &f2 * big(binomial(i, j - 2));
        acc = acc.add(&binom_nu_minus_one(j).scale(&c));
    }
    acc
}

/// `D(i; ν) = Σ_{j=0}^{i+1} C(ν−1, j)·{C(i, j+1) + (ρ+2)C(i, j) + (ρ+1)C(i, j−1)}`.
pub fn dpoly(i: i64, rho: i64) -> Poly {
    let mut acc = Poly::zero();
    for j in 0..=i + 1 {
        let c = binomial(i, j + 1) + (rho + 2) * binomial(i, j) + (rho + 1) * binomial(i, j - 1);
        acc = acc.add(&binom_nu_minus_one(j).scale(&big(c)));
    }
    acc
}

fn sign(k: i64) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Inclusion-exclusion over the join fan, with the given planar data in the
/// join polynomials. Does not check resolvability.
pub fn ehrhart_junior_with(poly: &PolygonQG, data: &PlanarData) -> Result<EhrhartPoly> {
    let r = poly.ty().r() as i64;
    let mut acc = Poly::zero();
    for i in 1..=r - 3 {
        let c = sign(r - 3 - i) * big(binomial(r - 2, i));
        acc = acc.add(&bpoly(i, data).scale(&c));
    }
    let pick = pick_polygon(poly);
    acc = acc.add(&Poly::from_coeffs(pick.coefficients()).scale(&sign(r - 3)));
    if let Some(rho) = poly.rho() {
        for i in 1..=r - 2 {
            let c = sign(r - 2 - i) * big(binomial(r - 2, i));
            acc = acc.add(&dpoly(i, rho).scale(&c));
        }
        let tail = Poly::from_coeffs(vec![big(1), big(rho + 1)]);
        acc = acc.add(&tail.scale(&sign(r - 2)));
    }
    EhrhartPoly::new(acc, r as usize - 1)
}

/// Ehrhart polynomial of the junior simplex of a resolvable type.
pub fn ehrhart_junior(t: &TwoParamType) -> Result<EhrhartPoly> {
    if !decide_two_param(t).resolvable() {
        return Err(Error::NotResolvable);
    }
    let poly = build_polygon(t);
    ehrhart_junior_with(&poly, &PlanarData::of_polygon(&poly))
}

/// Dimensions of the even cohomology groups of a crepant resolution.
pub fn cohomology_dims(t: &TwoParamType) -> Result<DeltaVector> {
    delta_from_a(&ehrhart_junior(t)?)
}

/// `1, ⌊l/(r−1)⌋` (`r−2` times), `⌊(l−1)/(r−1)⌋` for `1/l(1, …, 1, l−(r−1))`.
pub fn cohomology_dims_one_param(r: usize, l: i64) -> Result<DeltaVector> {
    let k = r as i64 - 1;
    if r < 3 || l < r as i64 || !matches!(residue(l, k), 0 | 1) {
        return Err(Error::NotResolvable);
    }
    let mut d = vec![1];
    d.extend(std::iter::repeat_n(l / k, r - 2));
    d.push((l - 1) / k);
    Ok(DeltaVector(d))
}

/// `#(ν·junior simplex ∩ N)`: each group element of age `a` contributes
/// `C(ν − a + r − 1, r − 1)` points.
pub fn count_dilated(t: &QuotientType, nu: i64) -> Result<i64> {
    let r = t.dim() as i64;
    let hist = t.age_histogram()?;
    Ok(hist
        .iter()
        .enumerate()
        .map(|(a, &n)| n * binomial(nu - a as i64 + r - 1, r - 1))
        .sum())
}

/// Ehrhart polynomial of the junior simplex from direct counts.
pub fn ehrhart_by_count(t: &QuotientType) -> Result<EhrhartPoly> {
    let r = t.dim() as i64;
    let counts = (1..=r)
        .map(|nu| count_dilated(t, nu))
        .collect::<Result<Vec<_>>>()?;
    EhrhartPoly::from_counts(&counts)
}
