//! JSON and CSV payloads written by the subcommands.

use crepant::criterion::{Branch, Decision, TauCone, Verdict};
use crepant::ehrhart::DeltaVector;
use crepant::exact::Fraction;
use crepant::fan::FanReport;
use crepant::geom::Vec2;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// How the input type was given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    TwoParam,
    OneParam,
    Weights,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub mode: Mode,
    pub l: i64,
    pub weights: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub hilbcon: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanSummary {
    pub generators: usize,
    pub maximal_cones: usize,
    pub verification: FanReport,
}

/// Output of `decide`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub input: Input,
    pub verdict: Verdict,
    pub paper_branch: Branch,
    pub decision: Decision,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_cone: Option<TauCone>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<DeltaVector>,
    pub elapsed_us: u64,
}

/// One row of `scan`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub r: usize,
    pub l: i64,
    pub alpha: i64,
    pub beta: i64,
    pub verdict: String,
    pub branch: String,
    pub q: Option<i64>,
    pub p: Option<i64>,
    pub kappa: Option<usize>,
    pub mu: Fraction,
    pub hilbcon: Option<bool>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfracReport {
    pub schema_version: u32,
    pub fraction: Fraction,
    pub regular: Vec<i64>,
    pub negreg: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqPair {
    pub p: i64,
    pub q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub schema_version: u32,
    pub p: i64,
    pub q: i64,
    /// Basis of the ambient lattice adapted to the cone.
    pub basis: [Vec2; 2],
    pub basic: bool,
    pub dual: PqPair,
    pub socius: i64,
    /// Minimal generators of the cone's lattice points, in adapted coordinates.
    pub hilbert_basis: Vec<Vec2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_vertices: Option<Vec<Vec2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_vertices: Option<Vec<Vec2>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub schema_version: u32,
    pub l: i64,
    pub weights: Vec<i64>,
    pub gorenstein: bool,
    pub small: bool,
    pub isolated: bool,
    pub age_histogram: Vec<i64>,
    /// Elements scaled by `l`.
    pub hilbert_basis: Vec<Vec<i64>>,
    pub hilbcon: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonSummary {
    pub points: Vec<Vec2>,
    pub boundary: Vec<Vec2>,
    pub w_chain: Vec<Vec2>,
    pub area: Fraction,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanOutput {
    pub schema_version: u32,
    pub input: Input,
    pub scale: i64,
    pub generators: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
    pub polygon: PolygonSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<FanReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub schema_version: u32,
    pub input: Input,
    /// Coefficients `a₀, …, a_{r−1}` as `"num/den"`.
    pub ehrhart: Vec<String>,
    pub delta: DeltaVector,
}
