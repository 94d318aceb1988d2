//! Exact scalar helpers shared by the other modules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Non-negative remainder `[x]_m`.
pub fn residue(x: i64, m: i64) -> i64 {
    x.rem_euclid(m)
}

/// A reduced fraction of machine integers, serialized as `"num/den"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    /// Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Fraction {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn integer(n: i64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Fraction {
    type Err = crate::Error;

    /// Parses `"n"` or `"n/d"` with `d ≠ 0`.
    fn from_str(s: &str) -> crate::Result<Self> {
        let bad = || crate::Error::InvalidEntries(format!("not a fraction: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        if d == 0 {
            return Err(bad());
        }
        Ok(Fraction::new(n, d))
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `"num/den"` rendering of a big rational (always with a denominator).
pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Binomial coefficient for machine integers; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Exact univariate polynomial over the rationals, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly(vec![c]).trimmed()
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        Poly(c).trimmed()
    }

    /// `binom(x + shift, k)` as a polynomial in `x`.
    pub fn binomial_in(shift: i64, k: i64) -> Self {
        if k < 0 {
            return Poly::zero();
        }
        let mut p = Poly::constant(BigRational::one());
        let mut fact = BigInt::one();
        for i in 0..k {
            p = p.mul(&Poly::from_coeffs(vec![big(shift - i), BigRational::one()]));
            fact *= BigInt::from(i + 1);
        }
        p.scale(&BigRational::new(BigInt::one(), fact))
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.0.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect()).trimmed()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly(self.0.iter().map(|a| a * c).collect()).trimmed()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Lagrange interpolation through the given nodes.
    pub fn interpolate(nodes: &[(BigRational, BigRational)]) -> Poly {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in nodes.iter().enumerate() {
            let mut basis = Poly::constant(yi.clone());
            for (j, (xj, _)) in nodes.iter().enumerate() {
                if i != j {
                    let lin = Poly::from_coeffs(vec![-xj.clone(), BigRational::one()]);
                    basis = basis.mul(&lin).scale(&(BigRational::one() / (xi - xj)));
                }
            }
            acc = acc.add(&basis);
        }
        acc
    }
}

/// Converts an integral big rational to `i64`, if it is one and fits.
pub fn to_i64(x: &BigRational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    x.to_integer().to_i64()
}
