//! Decision procedures for the existence of crepant, torus-equivariant, full
//! resolutions: the one-parameter congruence, the two-parameter arithmetic
//! criterion driven by a planar `(p, q)`-cone, and the Hilbert-basis route.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cfrac::regular_expand;
use crate::exact::{residue, Fraction};
use crate::quotient::{hilbcon_check, QuotientType};
use crate::{Error, Result};

/// The two-parameter type `1/l(1, …, 1, α, β)` in dimension `r` with
/// `α + β = l − (r − 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoParamType {
    r: usize,
    l: i64,
    alpha: i64,
    beta: i64,
}

impl TwoParamType {
    pub fn new(r: usize, l: i64, alpha: i64, beta: i64) -> Result<Self> {
        if r < 4 {
            return Err(Error::InvalidType(format!("r = {r} < 4")));
        }
        if l < r as i64 {
            return Err(Error::InvalidType(format!("l = {l} < r = {r}")));
        }
        if alpha < 1 || beta < 1 || alpha + beta != l - (r as i64 - 2) {
            return Err(Error::InvalidType(format!(
                "need alpha, beta >= 1 with alpha + beta = l - (r-2), got ({alpha}, {beta})"
            )));
        }
        Ok(TwoParamType { r, l, alpha, beta })
    }

    /// `β` is determined by `α`.
    pub fn with_alpha(r: usize, l: i64, alpha: i64) -> Result<Self> {
        TwoParamType::new(r, l, alpha, l - (r as i64 - 2) - alpha)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// `r − 2`, the number of unit weights.
    pub fn units(&self) -> i64 {
        self.r as i64 - 2
    }

    pub fn quotient_type(&self) -> QuotientType {
        let mut w = vec![1; self.r - 2];
        w.extend([self.alpha, self.beta]);
        QuotientType::new(self.l, w).expect("two-parameter types are valid")
    }

    /// `gcd(α, β, l)`.
    pub fn common_gcd(&self) -> i64 {
        self.alpha.gcd(&self.beta).gcd(&self.l)
    }

    /// `μ = (r − 2)/gcd(α, β, l)`.
    pub fn mu(&self) -> Fraction {
        Fraction::new(self.units(), self.common_gcd())
    }

    pub fn t1(&self) -> i64 {
        self.alpha.gcd(&self.l)
    }

    pub fn t2(&self) -> i64 {
        self.beta.gcd(&self.l)
    }
}

/// Characteristic numbers of a two-parameter type with `gcd(α, β, l) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharNumbers {
    pub t1: i64,
    pub t2: i64,
    pub z1: i64,
    pub z2: i64,
    pub c1: i64,
    pub c2: i64,
    pub p_breve: i64,
    pub q: i64,
    pub p: i64,
    /// Regular expansion of `q/p` (empty when `p = 0`).
    pub lambda: Vec<i64>,
}

impl CharNumbers {
    pub fn kappa(&self) -> usize {
        self.lambda.len()
    }

    /// `λ₂ + λ₄ + …`.
    pub fn even_sum(&self) -> i64 {
        self.lambda.iter().skip(1).step_by(2).sum()
    }

    /// `λ₁ + λ₃ + …`.
    pub fn odd_sum(&self) -> i64 {
        self.lambda.iter().step_by(2).sum()
    }

    /// Interior boundary points of the planar cone, i.e. the length of the
    /// negative-regular expansion of `q/(q − p)`: `Σλ_{2i−1} − [κ odd]`,
    /// and `0` for `p = 0`.
    pub fn rho(&self) -> i64 {
        if self.p == 0 {
            0
        } else {
            self.odd_sum() - (self.kappa() % 2) as i64
        }
    }
}

/// The Bézout pair `c₁z₁ + c₂z₂ = 1` with `−z₂ ≤ c₁ ≤ −1`.
pub fn normalized_bezout(z1: i64, z2: i64) -> (i64, i64) {
    let e = z1.extended_gcd(&z2);
    debug_assert_eq!(e.gcd, 1);
    // Shift by multiples of (z₂, −z₁) into the window.
    let c1 = -1 - residue(-1 - e.x, z2);
    let c2 = (1 - c1 * z1) / z2;
    (c1, c2)
}

pub fn characteristic_numbers(t: &TwoParamType) -> Result<CharNumbers> {
    if t.common_gcd() != 1 {
        return Err(Error::InvalidType(format!(
            "characteristic numbers need gcd(alpha, beta, l) = 1, got {}",
            t.common_gcd()
        )));
    }
    let (t1, t2) = (t.t1(), t.t2());
    let z1 = t.l / t2;
    let z2 = (t.alpha + t.units()) / t2;
    let (c1, c2) = normalized_bezout(z1, z2);
    let numer = c1 * t.l + c2 * t.alpha;
    if numer % t1 != 0 {
        return Err(Error::Inconsistent(format!(
            "{numer} not divisible by t1 = {t1}"
        )));
    }
    let p_breve = numer / t1;
    let q = t.l / (t1 * t2);
    let p = residue(p_breve, q);
    let lambda = if p == 0 {
        Vec::new()
    } else {
        regular_expand(q, p)?.entries().to_vec()
    };
    Ok(CharNumbers {
        t1,
        t2,
        z1,
        z2,
        c1,
        c2,
        p_breve,
        q,
        p,
        lambda,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Resolvable,
    NotResolvable,
    /// The necessary Hilbert-basis condition holds but is not known to suffice.
    NecessaryOnly,
}

/// Which case of the decision procedure produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "CON1")]
    Con1,
    #[serde(rename = "CON2")]
    Con2,
    #[serde(rename = "CON2-p0")]
    Con2P0,
    #[serde(rename = "FAIL-gcd")]
    FailGcd,
    #[serde(rename = "FAIL-t")]
    FailT,
    #[serde(rename = "FAIL-congruence")]
    FailCongruence,
    #[serde(rename = "ONE-PARAM")]
    OneParam,
    #[serde(rename = "FAIL-one-param")]
    FailOneParam,
    #[serde(rename = "HILBCON")]
    Hilbcon,
    #[serde(rename = "FAIL-hilbcon")]
    FailHilbcon,
    #[serde(rename = "HILBCON-necessary-only")]
    HilbconNecessaryOnly,
}

impl Branch {
    /// The case label used in reports.
    pub fn label(&self) -> &'static str {
        match self {
            Branch::Con1 => "CON1",
            Branch::Con2 => "CON2",
            Branch::Con2P0 => "CON2-p0",
            Branch::FailGcd => "FAIL-gcd",
            Branch::FailT => "FAIL-t",
            Branch::FailCongruence => "FAIL-congruence",
            Branch::OneParam => "ONE-PARAM",
            Branch::FailOneParam => "FAIL-one-param",
            Branch::Hilbcon => "HILBCON",
            Branch::FailHilbcon => "FAIL-hilbcon",
            Branch::HilbconNecessaryOnly => "HILBCON-necessary-only",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Resolvable => "resolvable",
            Verdict::NotResolvable => "not-resolvable",
            Verdict::NecessaryOnly => "necessary-only",
        }
    }
}

/// One tested congruence `value ≡ wanted (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub label: String,
    pub value: i64,
    pub modulus: i64,
    pub wanted: i64,
    pub holds: bool,
}

impl Congruence {
    fn new(label: impl Into<String>, value: i64, modulus: i64, wanted: i64) -> Self {
        Congruence {
            label: label.into(),
            value,
            modulus,
            wanted,
            holds: residue(value, modulus) == residue(wanted, modulus),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub branch: Branch,
    pub char_numbers: Option<CharNumbers>,
    pub mu: Option<Fraction>,
    pub checks: Vec<Congruence>,
    /// Cohomology dimensions, when the procedure provides them.
    pub dims: Option<Vec<i64>>,
}

impl Decision {
    pub fn resolvable(&self) -> bool {
        self.verdict == Verdict::Resolvable
    }

    fn new(verdict: Verdict, branch: Branch) -> Self {
        Decision {
            verdict,
            branch,
            char_numbers: None,
            mu: None,
            checks: Vec::new(),
            dims: None,
        }
    }
}

/// The arithmetic criterion for `1/l(1, …, 1, α, β)`.
pub fn decide_two_param(t: &TwoParamType) -> Decision {
    use Verdict::*;
    let m = t.units();
    let g = t.common_gcd();
    let with_mu = |mut d: Decision| {
        d.mu = Some(t.mu());
        d
    };
    if g == m {
        return with_mu(Decision::new(Resolvable, Branch::Con1));
    }
    if g != 1 {
        return with_mu(Decision::new(NotResolvable, Branch::FailGcd));
    }
    let cn = characteristic_numbers(t).expect("gcd(alpha, beta, l) = 1");
    let mut checks = vec![
        Congruence::new("t1", cn.t1, m, 1),
        Congruence::new("t2", cn.t2, m, 1),
    ];
    let finish = |verdict, branch, checks, cn| {
        let mut d = with_mu(Decision::new(verdict, branch));
        d.checks = checks;
        d.char_numbers = Some(cn);
        d
    };
    if !checks.iter().all(|c| c.holds) {
        return finish(NotResolvable, Branch::FailT, checks, cn);
    }
    if cn.p == 0 {
        return finish(Resolvable, Branch::Con2P0, checks, cn);
    }
    let mut cong = vec![Congruence::new(
        "(p_breve - p)/q",
        (cn.p_breve - cn.p) / cn.q,
        m,
        0,
    )];
    let kappa = cn.kappa();
    if kappa >= 3 {
        for j in 1..=(kappa - 1) / 2 {
            cong.push(Congruence::new(
                format!("lambda_{}", 2 * j),
                cn.lambda[2 * j - 1],
                m,
                0,
            ));
        }
    }
    if kappa.is_multiple_of(2) {
        cong.push(Congruence::new(
            format!("lambda_{kappa}"),
            cn.lambda[kappa - 1],
            m,
            1,
        ));
    }
    let ok = cong.iter().all(|c| c.holds);
    checks.extend(cong);
    if ok {
        finish(Resolvable, Branch::Con2, checks, cn)
    } else {
        finish(NotResolvable, Branch::FailCongruence, checks, cn)
    }
}

/// Parameters of the planar cone attached to a type with `μ ≠ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauCone {
    pub p: i64,
    pub q: i64,
    pub rho: i64,
}

/// Multiplicity of the planar cone for any type with `μ ≠ 1`:
/// `([t₁]_{r−2}·[t₂]_{r−2} / (t₁t₂))·(l / gcd(α, β, l))`.
pub fn tau_multiplicity(t: &TwoParamType) -> Result<Fraction> {
    let m = t.units();
    if t.common_gcd() == m {
        return Err(Error::InvalidType("mu = 1: no planar cone".into()));
    }
    let (t1, t2) = (t.t1(), t.t2());
    Ok(Fraction::new(
        residue(t1, m) * residue(t2, m) * t.l,
        t1 * t2 * t.common_gcd(),
    ))
}

/// `(p, q, ρ)` of the planar cone; requires `gcd(α, β, l) = 1` and
/// `t₁ ≡ t₂ ≡ 1 (mod r−2)`.
pub fn tau_cone_params(t: &TwoParamType) -> Result<TauCone> {
    let cn = characteristic_numbers(t)?;
    let m = t.units();
    if residue(cn.t1, m) != residue(1, m) || residue(cn.t2, m) != residue(1, m) {
        return Err(Error::InvalidType("t1 or t2 is not 1 modulo r-2".into()));
    }
    Ok(TauCone {
        p: cn.p,
        q: cn.q,
        rho: cn.rho(),
    })
}

/// Cohomology dimensions `1, ⌊l/(r−1)⌋ (r−2 times), ⌊(l−1)/(r−1)⌋`.
pub fn one_param_dims(r: usize, l: i64) -> Vec<i64> {
    let k = r as i64 - 1;
    let mut d = vec![1];
    d.extend(std::iter::repeat_n(l / k, r - 2));
    d.push((l - 1) / k);
    d
}

/// The congruence criterion for `1/l(1, …, 1, l − (r−1))`.
pub fn decide_one_param(r: usize, l: i64) -> Result<Decision> {
    if r < 4 || l < r as i64 {
        return Err(Error::InvalidType(format!(
            "need l >= r >= 4, got r={r}, l={l}"
        )));
    }
    let k = r as i64 - 1;
    let c = Congruence::new(
        "min([l], [l-1]) mod (r-1)",
        residue(l, k).min(residue(l - 1, k)),
        k,
        0,
    );
    let mut d = if c.holds {
        let mut d = Decision::new(Verdict::Resolvable, Branch::OneParam);
        d.dims = Some(one_param_dims(r, l));
        d
    } else {
        Decision::new(Verdict::NotResolvable, Branch::FailOneParam)
    };
    d.checks.push(c);
    Ok(d)
}

/// Rewrites a type as `1/l(1, …, 1, α, β)` when `r − 2` of its weights are
/// one unit `w` modulo `l`, by multiplying all weights with `w⁻¹`.
pub fn as_two_param(t: &QuotientType) -> Option<TwoParamType> {
    let (l, r) = (t.order(), t.dim());
    if r < 4 {
        return None;
    }
    let ws = t.weights();
    ws.iter().find_map(|&w| {
        let e = w.extended_gcd(&l);
        if e.gcd != 1 || ws.iter().filter(|&&x| x == w).count() < r - 2 {
            return None;
        }
        let inv = residue(e.x, l);
        let mut rest: Vec<i64> = Vec::new();
        let mut ones = 0;
        for &x in ws {
            let y = residue(x * inv, l);
            if y == 1 && ones < r - 2 {
                ones += 1;
            } else {
                rest.push(y);
            }
        }
        TwoParamType::new(r, l, rest[0], rest[1]).ok()
    })
}

/// The Hilbert-basis route for a general Gorenstein type. The condition is
/// necessary; it is also sufficient for types with a two-parameter form,
/// where the continued-fraction criterion must agree with it.
pub fn decide_mt1(t: &QuotientType, guard: u64) -> Result<Decision> {
    let r = t.dim();
    if r < 4 {
        return Err(Error::InvalidType(format!("r = {r} < 4")));
    }
    if !t.is_gorenstein() {
        return Err(Error::NotGorenstein);
    }
    if !t.is_small() {
        return Err(Error::InvalidType("type is not small".into()));
    }
    if !hilbcon_check(t, guard)? {
        return Ok(Decision::new(Verdict::NotResolvable, Branch::FailHilbcon));
    }
    match as_two_param(t) {
        Some(two) => {
            let d = decide_two_param(&two);
            if !d.resolvable() {
                return Err(Error::Inconsistent(format!(
                    "Hilbert basis condition holds but {two:?} fails with {}",
                    d.branch
                )));
            }
            Ok(Decision {
                verdict: Verdict::Resolvable,
                branch: Branch::Hilbcon,
                ..d
            })
        }
        None => Ok(Decision::new(
            Verdict::NecessaryOnly,
            Branch::HilbconNecessaryOnly,
        )),
    }
}
