//! Regular and negative-regular continued fractions of rationals `κ/λ > 1`.
//!
//! Regular: `κ/λ = a₁ + 1/(a₂ + 1/(… + 1/a_ν))` with `a_ν ≥ 2`.
//! Negative-regular: `κ/λ = c₁ − 1/(c₂ − 1/(… − 1/c_ρ))` with all `c_j ≥ 2`.

use num_integer::Integer;
use serde::Serialize;

use crate::{Error, Result};

fn check_fraction(num: i64, den: i64) -> Result<()> {
    if den <= 0 || den >= num {
        return Err(Error::FractionOutOfRange { num, den });
    }
    if num.gcd(&den) != 1 {
        return Err(Error::NotCoprime { num, den });
    }
    Ok(())
}

/// Numerators and denominators of the convergents, indexed from `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Convergents {
    pub numerators: Vec<i64>,
    pub denominators: Vec<i64>,
}

impl Convergents {
    /// Numerator with index `i >= -1`.
    pub fn num(&self, i: isize) -> i64 {
        self.numerators[(i + 1) as usize]
    }

    /// Denominator with index `i >= -1`.
    pub fn den(&self, i: isize) -> i64 {
        self.denominators[(i + 1) as usize]
    }

    /// Index of the last convergent.
    pub fn last(&self) -> isize {
        self.numerators.len() as isize - 2
    }
}

/// Regular continued fraction `[a₁, …, a_ν]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularCF {
    entries: Vec<i64>,
    num: i64,
    den: i64,
}

impl RegularCF {
    /// Builds from entries, checking `a_j ≥ 1` and `a_ν ≥ 2` (or `ν = 1`, `a₁ ≥ 2`).
    pub fn from_entries(entries: Vec<i64>) -> Result<Self> {
        let ok =
            !entries.is_empty() && entries.iter().all(|&a| a >= 1) && *entries.last().unwrap() >= 2;
        if !ok {
            return Err(Error::InvalidEntries(format!("{entries:?}")));
        }
        let conv = regular_table(&entries);
        let last = conv.last();
        Ok(RegularCF {
            num: conv.num(last),
            den: conv.den(last),
            entries,
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The represented fraction `(κ, λ)`.
    pub fn fraction(&self) -> (i64, i64) {
        (self.num, self.den)
    }

    /// `P_i / Q_i` with `P₋₁ = 0, P₀ = 1, Q₋₁ = 1, Q₀ = 0`.
    pub fn convergents(&self) -> Convergents {
        regular_table(&self.entries)
    }

    /// Sum of the even-indexed entries `a₂ + a₄ + …`.
    pub fn even_sum(&self) -> i64 {
        self.entries.iter().skip(1).step_by(2).sum()
    }
}

fn regular_table(entries: &[i64]) -> Convergents {
    let mut p = vec![0, 1];
    let mut q = vec![1, 0];
    for &a in entries {
        let n = p.len();
        p.push(a * p[n - 1] + p[n - 2]);
        q.push(a * q[n - 1] + q[n - 2]);
    }
    Convergents {
        numerators: p,
        denominators: q,
    }
}

/// Negative-regular continued fraction `[[c₁, …, c_ρ]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegRegCF {
    entries: Vec<i64>,
    num: i64,
    den: i64,
}

impl NegRegCF {
    /// Builds from entries, checking `c_j ≥ 2`.
    pub fn from_entries(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|&c| c < 2) {
            return Err(Error::InvalidEntries(format!("{entries:?}")));
        }
        let conv = negreg_table(&entries);
        let last = conv.last();
        Ok(NegRegCF {
            num: conv.num(last),
            den: conv.den(last),
            entries,
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn fraction(&self) -> (i64, i64) {
        (self.num, self.den)
    }

    /// `R_i / S_i` with `R₋₁ = 0, R₀ = 1, S₋₁ = −1, S₀ = 0`.
    pub fn convergents(&self) -> Convergents {
        negreg_table(&self.entries)
    }
}

fn negreg_table(entries: &[i64]) -> Convergents {
    let mut r = vec![0, 1];
    let mut s = vec![-1, 0];
    for &c in entries {
        let n = r.len();
        r.push(c * r[n - 1] - r[n - 2]);
        s.push(c * s[n - 1] - s[n - 2]);
    }
    Convergents {
        numerators: r,
        denominators: s,
    }
}

/// Euclidean algorithm. Requires `0 < λ < κ` coprime (`λ = 1` gives `[κ]`).
pub fn regular_expand(kappa: i64, lambda: i64) -> Result<RegularCF> {
    check_fraction(kappa, lambda)?;
    let (mut a, mut b) = (kappa, lambda);
    let mut entries = Vec::new();
    while b != 0 {
        let (quot, rem) = a.div_rem(&b);
        entries.push(quot);
        (a, b) = (b, rem);
    }
    Ok(RegularCF {
        entries,
        num: kappa,
        den: lambda,
    })
}

/// Euclidean algorithm with rounding up. Same preconditions as [`regular_expand`].
pub fn negreg_expand(kappa: i64, lambda: i64) -> Result<NegRegCF> {
    check_fraction(kappa, lambda)?;
    let (mut a, mut b) = (kappa, lambda);
    let mut entries = Vec::new();
    while b != 0 {
        let c = Integer::div_ceil(&a, &b);
        entries.push(c);
        (a, b) = (b, c * b - a);
    }
    Ok(NegRegCF {
        entries,
        num: kappa,
        den: lambda,
    })
}

/// Converts a regular expansion into the negative-regular expansion of the
/// same fraction: odd-position entries become single entries (shifted by 1
/// or 2), even-position entries `a` become runs of `a − 1` twos.
pub fn regular_to_negreg(cf: &RegularCF) -> NegRegCF {
    let a = cf.entries();
    let nu = a.len();
    let mut out = Vec::new();
    for (idx, &entry) in a.iter().enumerate() {
        let pos = idx + 1;
        if pos % 2 == 1 {
            let shift = 2 - i64::from(pos == 1) - i64::from(pos == nu);
            out.push(entry + shift);
        } else {
            out.extend(std::iter::repeat_n(2, (entry - 1) as usize));
        }
    }
    NegRegCF {
        entries: out,
        num: cf.num,
        den: cf.den,
    }
}

/// The Bézout pair `κ·x₀ + λ·x₀′ = 1` read off the regular expansion:
/// `x₀ = ε·Q_{ν−1}`, `x₀′ = −ε·P_{ν−1}` with `ε = (−1)^ν`.
pub fn bezout_min(kappa: i64, lambda: i64) -> Result<(i64, i64)> {
    let cf = regular_expand(kappa, lambda)?;
    let conv = cf.convergents();
    let nu = cf.len() as isize;
    let eps = if nu % 2 == 0 { 1 } else { -1 };
    Ok((eps * conv.den(nu - 1), -eps * conv.num(nu - 1)))
}

/// How the expansions of `q/p` and `q/(q−p)` are related.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualCase {
    /// `q/(q−p)` starts with 1 and `q/p` is one entry shorter (`p < q/2`).
    DirectShorter,
    /// `q/p` starts with 1 and is one entry longer (`p > q/2`).
    DirectLonger,
    /// `q = 2, p = 1`: both expansions are `[2]`.
    SelfDual,
}

/// The pair of regular expansions attached to a `(p, q)`-cone and its dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualExpansions {
    /// Expansion of `q/(q−p)`.
    pub complement: RegularCF,
    /// Expansion of `q/p`.
    pub direct: RegularCF,
    pub case: DualCase,
}

/// Expansions of `q/(q−p)` and `q/p`, with the case distinction between them.
pub fn dual_expansions(q: i64, p: i64) -> Result<DualExpansions> {
    if p <= 0 || p >= q {
        return Err(Error::FractionOutOfRange { num: q, den: p });
    }
    let complement = regular_expand(q, q - p)?;
    let direct = regular_expand(q, p)?;
    let case = match (complement.entries[0] == 1, direct.entries[0] == 1) {
        (true, false) => DualCase::DirectShorter,
        (false, true) => DualCase::DirectLonger,
        (false, false) => DualCase::SelfDual,
        (true, true) => {
            return Err(Error::Inconsistent(format!(
                "both expansions of {q}/{p} start with 1"
            )))
        }
    };
    Ok(DualExpansions {
        complement,
        direct,
        case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions_of_twelve_sevenths() {
        assert_eq!(regular_expand(12, 7).unwrap().entries(), &[1, 1, 2, 2]);
        assert_eq!(negreg_expand(12, 7).unwrap().entries(), &[2, 4, 2]);
        assert_eq!(regular_expand(11, 5).unwrap().entries(), &[2, 5]);
        assert_eq!(negreg_expand(2, 1).unwrap().entries(), &[2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            regular_expand(5, 5),
            Err(Error::FractionOutOfRange { .. })
        ));
        assert!(matches!(
            regular_expand(5, 0),
            Err(Error::FractionOutOfRange { .. })
        ));
        assert!(matches!(negreg_expand(6, 4), Err(Error::NotCoprime { .. })));
        assert!(RegularCF::from_entries(vec![2, 1]).is_err());
        assert!(NegRegCF::from_entries(vec![3, 1]).is_err());
    }

    #[test]
    fn convergent_tables() {
        let c = regular_expand(11, 5).unwrap().convergents();
        assert_eq!(c.numerators, vec![0, 1, 2, 11]);
        assert_eq!(c.denominators, vec![1, 0, 1, 5]);
        let d = negreg_expand(2, 1).unwrap().convergents();
        assert_eq!(d.numerators, vec![0, 1, 2]);
        assert_eq!(d.denominators, vec![-1, 0, 1]);
        let e = regular_expand(12, 7).unwrap().convergents();
        assert_eq!((e.num(4), e.den(4)), (12, 7));
    }

    #[test]
    fn conversion_small_cases() {
        let conv = |k, l| {
            regular_to_negreg(&regular_expand(k, l).unwrap())
                .entries()
                .to_vec()
        };
        assert_eq!(conv(12, 7), vec![2, 4, 2]);
        assert_eq!(conv(7, 4), vec![2, 4]);
        assert_eq!(conv(7, 5), vec![2, 2, 3]);
        assert_eq!(conv(9, 1), vec![9]);
        assert_eq!(conv(6, 5), vec![2, 2, 2, 2, 2]);
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout_min(11, 5).unwrap(), (1, -2));
        assert_eq!(bezout_min(12, 7).unwrap(), (3, -5));
        assert_eq!(bezout_min(9, 1).unwrap(), (0, 1));
    }

    #[test]
    fn dual_cases() {
        let d = dual_expansions(7, 4).unwrap();
        assert_eq!(d.complement.entries(), &[2, 3]);
        assert_eq!(d.direct.entries(), &[1, 1, 3]);
        assert_eq!(d.case, DualCase::DirectLonger);
        let d = dual_expansions(12, 5).unwrap();
        assert_eq!(d.case, DualCase::DirectShorter);
        assert_eq!(dual_expansions(2, 1).unwrap().case, DualCase::SelfDual);
        assert!(dual_expansions(5, 0).is_err());
    }
}
