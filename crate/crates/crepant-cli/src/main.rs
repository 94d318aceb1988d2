//! `crepant`: decide and construct crepant resolutions of cyclic quotient
//! singularities from the command line.
//!
//! Exit codes: 0 success or resolvable, 1 not resolvable (or an oracle
//! disagreement in `scan`), 2 inconclusive, 3 invalid input or internal error.

mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use crepant::cfrac::{negreg_expand, regular_expand};
use crepant::cone2d::{
    dual_pq, hilbert_basis_2d, kleinian_vertices, pq_normal_form, socius, PqCone,
};
use crepant::criterion::{
    decide_mt1, decide_one_param, decide_two_param, tau_cone_params, Decision, TwoParamType,
    Verdict,
};
use crepant::ehrhart::{
    cohomology_dims, cohomology_dims_one_param, delta_from_a, ehrhart_by_count, ehrhart_junior,
};
use crepant::exact::{rational_string, Fraction};
use crepant::fan::{build_join_fan, build_polygon, triangulate_polygon_max, verify_fan};
use crepant::quotient::{hilbcon_check, hilbert_basis_bruteforce, QuotientType, DEFAULT_GUARD};

use report::*;

#[derive(Parser)]
#[command(
    name = "crepant",
    version,
    about = "Crepant resolutions of Gorenstein cyclic quotient singularities"
)]
struct Cli {
    /// Size limit for brute-force Hilbert basis computations.
    #[arg(long, global = true, env = "CREPANT_GUARD", default_value_t = DEFAULT_GUARD)]
    guard: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a crepant full resolution exists.
    Decide(DecideArgs),
    /// Decide every two-parameter type up to a bound; CSV on stdout.
    Scan(ScanArgs),
    /// Regular and negative-regular continued fractions of NUM/DEN.
    Cfrac { num: i64, den: i64 },
    /// Normal form, dual and boundary data of a two-dimensional cone.
    Cone(ConeArgs),
    /// Brute-force Hilbert basis of a cyclic quotient type.
    Hilbert {
        #[arg(long)]
        l: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<i64>,
    },
    /// Explicit crepant resolution fan of a resolvable two-parameter type.
    Fan {
        #[command(flatten)]
        ty: TypeArgs,
        /// Append the basicness, crepancy and covering checks.
        #[arg(long)]
        verify: bool,
    },
    /// Ehrhart polynomial and cohomology dimensions.
    Cohomology {
        #[command(flatten)]
        ty: TypeArgs,
        /// Use the one-parameter type 1/l(1, …, 1, l−(r−1)).
        #[arg(long)]
        one_param: bool,
    },
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    l: i64,
    #[arg(long)]
    alpha: Option<i64>,
    /// Defaults to l − (r−2) − alpha.
    #[arg(long)]
    beta: Option<i64>,
}

impl TypeArgs {
    fn two_param(&self) -> Result<TwoParamType> {
        let alpha = self.alpha.context("--alpha is required")?;
        let beta = self.beta.unwrap_or(self.l - (self.r as i64 - 2) - alpha);
        Ok(TwoParamType::new(self.r, self.l, alpha, beta)?)
    }
}

#[derive(Args)]
struct DecideArgs {
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    l: i64,
    #[arg(long)]
    alpha: Option<i64>,
    #[arg(long)]
    beta: Option<i64>,
    /// Decide 1/l(1, …, 1, l−(r−1)).
    #[arg(long, conflicts_with_all = ["alpha", "beta", "weights"])]
    one_param: bool,
    /// Arbitrary weights, decided through the Hilbert basis.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["alpha", "beta", "r"])]
    weights: Option<Vec<i64>>,
    /// Cross-check against the brute-force Hilbert basis condition.
    #[arg(long)]
    oracle: bool,
    /// Build and verify the resolution fan (resolvable two-parameter types).
    #[arg(long)]
    fan: bool,
    /// Include cohomology dimensions (resolvable types).
    #[arg(long)]
    cohomology: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    lmax: i64,
    #[arg(long)]
    lmin: Option<i64>,
    /// Also list pairs with alpha > beta.
    #[arg(long)]
    all_pairs: bool,
    /// Compare each verdict with the brute-force Hilbert basis condition.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct ConeArgs {
    #[arg(long, requires = "q")]
    p: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    /// First generator `x,y` (with --n2 instead of --p/--q).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "n2", conflicts_with_all = ["p", "q"])]
    n1: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    n2: Option<Vec<i64>>,
}

enum Outcome {
    Yes,
    No,
    Unknown,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        ExitCode::from(match o {
            Outcome::Yes => 0,
            Outcome::No => 1,
            Outcome::Unknown => 2,
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(o) => o.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let guard = cli.guard;
    match cli.command {
        Command::Decide(a) => decide(a, guard),
        Command::Scan(a) => scan(a, guard),
        Command::Cfrac { num, den } => {
            print_json(&CfracReport {
                schema_version: SCHEMA_VERSION,
                fraction: Fraction::new(num, den),
                regular: regular_expand(num, den)?.entries().to_vec(),
                negreg: negreg_expand(num, den)?.entries().to_vec(),
            })?;
            Ok(Outcome::Yes)
        }
        Command::Cone(a) => cone(a),
        Command::Hilbert { l, weights } => hilbert(l, weights, guard),
        Command::Fan { ty, verify } => fan(ty, verify),
        Command::Cohomology { ty, one_param } => cohomology(ty, one_param),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn verdict_outcome(v: Verdict) -> Outcome {
    match v {
        Verdict::Resolvable => Outcome::Yes,
        Verdict::NotResolvable => Outcome::No,
        Verdict::NecessaryOnly => Outcome::Unknown,
    }
}

fn decide(a: DecideArgs, guard: u64) -> Result<Outcome> {
    let start = Instant::now();
    let (mode, qt, two, decision): (Mode, QuotientType, Option<TwoParamType>, Decision) =
        if let Some(weights) = a.weights {
            let qt = QuotientType::new(a.l, weights)?;
            let d = decide_mt1(&qt, guard)?;
            (Mode::Weights, qt, None, d)
        } else {
            let r = a.r.context("--r is required")?;
            if a.one_param {
                let qt = QuotientType::one_param(r, a.l)?;
                (Mode::OneParam, qt, None, decide_one_param(r, a.l)?)
            } else {
                let t = TypeArgs {
                    r,
                    l: a.l,
                    alpha: a.alpha,
                    beta: a.beta,
                }
                .two_param()?;
                (
                    Mode::TwoParam,
                    t.quotient_type(),
                    Some(t),
                    decide_two_param(&t),
                )
            }
        };
    let oracle = if a.oracle {
        let hilbcon = hilbcon_check(&qt, guard)?;
        let agrees = match decision.verdict {
            Verdict::Resolvable => hilbcon,
            Verdict::NotResolvable => !hilbcon,
            Verdict::NecessaryOnly => hilbcon,
        };
        if !agrees {
            eprintln!(
                "verdict {:?} disagrees with the Hilbert basis condition ({hilbcon})",
                decision.verdict
            );
        }
        Some(OracleCheck { hilbcon, agrees })
    } else {
        None
    };
    let tau_cone = two
        .filter(|t| t.common_gcd() != t.units())
        .and_then(|t| tau_cone_params(&t).ok());
    let fan = match (a.fan, two) {
        (true, Some(t)) if decision.resolvable() => {
            let poly = build_polygon(&t);
            let tri = triangulate_polygon_max(&poly);
            let fan = build_join_fan(&t, &poly, &tri)?;
            Some(FanSummary {
                generators: fan.generators.len(),
                maximal_cones: fan.maximal_cones.len(),
                verification: verify_fan(&fan)?,
            })
        }
        _ => None,
    };
    let cohomology = match (a.cohomology, decision.resolvable()) {
        (true, true) => Some(match two {
            Some(t) => cohomology_dims(&t)?,
            None => delta_from_a(&ehrhart_by_count(&qt)?)?,
        }),
        _ => None,
    };
    let outcome = match &oracle {
        Some(o) if !o.agrees => bail!("decision and Hilbert basis oracle disagree"),
        _ => verdict_outcome(decision.verdict),
    };
    let report = Report {
        schema_version: SCHEMA_VERSION,
        input: Input {
            mode,
            l: qt.order(),
            weights: qt.weights().to_vec(),
        },
        verdict: decision.verdict,
        paper_branch: decision.branch,
        decision,
        tau_cone,
        oracle,
        fan,
        cohomology,
        elapsed_us: start.elapsed().as_micros() as u64,
    };
    print_json(&report)?;
    Ok(outcome)
}

fn scan(a: ScanArgs, guard: u64) -> Result<Outcome> {
    let m = a.r as i64 - 2;
    let lmin = a.lmin.unwrap_or(a.r as i64).max(a.r as i64);
    let mut out = csv::Writer::from_writer(std::io::stdout().lock());
    let mut disagreements = 0usize;
    for l in lmin..=a.lmax {
        for alpha in 1..l - m {
            let beta = l - m - alpha;
            if !a.all_pairs && alpha > beta {
                continue;
            }
            let t = TwoParamType::new(a.r, l, alpha, beta)?;
            let d = decide_two_param(&t);
            let (hilbcon, agrees) = if a.oracle {
                let h = hilbcon_check(&t.quotient_type(), guard)
                    .with_context(|| format!("oracle for l={l}, alpha={alpha}"))?;
                let ok = h == d.resolvable();
                if !ok {
                    disagreements += 1;
                    eprintln!(
                        "disagreement at r={}, l={l}, alpha={alpha}, beta={beta}",
                        a.r
                    );
                }
                (Some(h), Some(ok))
            } else {
                (None, None)
            };
            let cn = d.char_numbers.as_ref();
            out.serialize(ScanRow {
                r: a.r,
                l,
                alpha,
                beta,
                verdict: d.verdict.label().to_string(),
                branch: d.branch.label().to_string(),
                q: cn.map(|c| c.q),
                p: cn.map(|c| c.p),
                kappa: cn.map(|c| c.kappa()),
                mu: t.mu(),
                hilbcon,
                agrees,
            })?;
        }
    }
    out.flush()?;
    Ok(if disagreements == 0 {
        Outcome::Yes
    } else {
        Outcome::No
    })
}

fn cone(a: ConeArgs) -> Result<Outcome> {
    let c = match (a.p, a.q, a.n1, a.n2) {
        (Some(p), Some(q), None, None) => PqCone::new(p, q)?,
        (None, None, Some(n1), Some(n2)) => pq_normal_form(planar(&n1)?, planar(&n2)?)?,
        _ => bail!("give either --p and --q, or --n1 and --n2"),
    };
    let dual = dual_pq(&c);
    let (boundary_vertices, dual_vertices) = if c.is_basic() {
        (None, None)
    } else {
        let k = kleinian_vertices(&c)?;
        (Some(k.primal), Some(k.dual))
    };
    print_json(&ConeReport {
        schema_version: SCHEMA_VERSION,
        p: c.p(),
        q: c.q(),
        basis: c.basis(),
        basic: c.is_basic(),
        dual: PqPair {
            p: dual.p(),
            q: dual.q(),
        },
        socius: socius(c.p(), c.q())?,
        hilbert_basis: hilbert_basis_2d(&c),
        boundary_vertices,
        dual_vertices,
    })?;
    Ok(Outcome::Yes)
}

fn planar(v: &[i64]) -> Result<[i64; 2]> {
    match v {
        &[x, y] => Ok([x, y]),
        _ => bail!("expected two coordinates x,y, got {v:?}"),
    }
}

fn hilbert(l: i64, weights: Vec<i64>, guard: u64) -> Result<Outcome> {
    let t = QuotientType::new(l, weights)?;
    if !t.is_gorenstein() {
        bail!("type 1/{l}{:?} is not Gorenstein", t.weights());
    }
    let hb = hilbert_basis_bruteforce(&t, guard)?;
    print_json(&HilbertReport {
        schema_version: SCHEMA_VERSION,
        l,
        weights: t.weights().to_vec(),
        gorenstein: true,
        small: t.is_small(),
        isolated: t.splitting_codim().1,
        age_histogram: t.age_histogram()?,
        hilbert_basis: hb.elements,
        hilbcon: hb.all_junior,
    })?;
    Ok(if hb.all_junior {
        Outcome::Yes
    } else {
        Outcome::No
    })
}

fn fan(ty: TypeArgs, verify: bool) -> Result<Outcome> {
    let t = ty.two_param()?;
    let d = decide_two_param(&t);
    if !d.resolvable() {
        eprintln!("no crepant full resolution: branch {}", d.branch);
        return Ok(Outcome::No);
    }
    let poly = build_polygon(&t);
    let tri = triangulate_polygon_max(&poly);
    let fan = build_join_fan(&t, &poly, &tri)?;
    let verification = verify.then(|| verify_fan(&fan)).transpose()?;
    let failed = verification.as_ref().is_some_and(|r| !r.passed());
    if let Some(r) = verification.as_ref().filter(|r| !r.passed()) {
        for f in &r.failures {
            eprintln!("{f}");
        }
    }
    let qt = t.quotient_type();
    print_json(&FanOutput {
        schema_version: SCHEMA_VERSION,
        input: Input {
            mode: Mode::TwoParam,
            l: t.l(),
            weights: qt.weights().to_vec(),
        },
        scale: fan.scale,
        generators: fan.generators,
        maximal_cones: fan.maximal_cones,
        polygon: PolygonSummary {
            area: poly.volume(),
            points: poly.points,
            boundary: poly.boundary,
            w_chain: poly.w_chain,
            triangles: tri.triangles,
        },
        verification,
    })?;
    if failed {
        return Err(anyhow!("fan verification failed"));
    }
    Ok(Outcome::Yes)
}

fn cohomology(ty: TypeArgs, one_param: bool) -> Result<Outcome> {
    let (mode, qt, ehrhart, delta) = if one_param {
        let qt = QuotientType::one_param(ty.r, ty.l)?;
        let delta = match cohomology_dims_one_param(ty.r, ty.l) {
            Ok(d) => d,
            Err(_) => {
                eprintln!(
                    "1/{}(1, …, 1, {}) has no crepant full resolution",
                    ty.l,
                    ty.l - (ty.r as i64 - 1)
                );
                return Ok(Outcome::No);
            }
        };
        let ehrhart = ehrhart_by_count(&qt)?;
        if delta_from_a(&ehrhart)? != delta {
            bail!("closed form and lattice-point count disagree");
        }
        (Mode::OneParam, qt, ehrhart, delta)
    } else {
        let t = ty.two_param()?;
        if !decide_two_param(&t).resolvable() {
            eprintln!("no crepant full resolution for {t:?}");
            return Ok(Outcome::No);
        }
        let ehrhart = ehrhart_junior(&t)?;
        let delta = delta_from_a(&ehrhart)?;
        (Mode::TwoParam, t.quotient_type(), ehrhart, delta)
    };
    print_json(&CohomologyReport {
        schema_version: SCHEMA_VERSION,
        input: Input {
            mode,
            l: qt.order(),
            weights: qt.weights().to_vec(),
        },
        ehrhart: ehrhart.coefficients().iter().map(rational_string).collect(),
        delta,
    })?;
    Ok(Outcome::Yes)
}
