//! Serialized report types.

use std::collections::BTreeMap;

use serde::Serialize;

use arrangement_core::exact::{Cyclo, RootOfUnity};
use arrangement_core::multinet::{
    DirectionCount, MonodromyBound, MonodromyCertificate, MultinetStructure, PencilRealization,
};
use arrangement_core::oscohom::ResonanceComponent;
use arrangement_core::pi1cover::{EigenspaceReport, OrderDims, PullbackCheck};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: &'static str,
    pub command: String,
    pub arrangement: ArrangementSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resonance: Option<ResonanceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multinets: Option<MultinetSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<CertificateRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenspaces: Option<EigenSection>,
    pub consistency: Vec<Check>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.consistency.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.consistency.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementSummary {
    pub name: String,
    pub d: usize,
    pub cyclotomic_order: u32,
    pub complexified_real: bool,
    pub lines: Vec<[Cyclo; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointEntry {
    pub point: [Cyclo; 3],
    pub incident: Vec<usize>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeSection {
    /// Number of points of each multiplicity.
    pub census: BTreeMap<usize, usize>,
    pub points: Vec<PointEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResonanceSection {
    pub local: usize,
    pub multinet: usize,
    pub components: Vec<ResonanceComponent>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchRecord {
    pub k: usize,
    pub reduced_only: bool,
    pub max_mu: u32,
    pub max_support: Option<usize>,
    pub exhaustive: bool,
    pub found: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultinetEntry {
    /// "search", "catalog" or both.
    pub sources: Vec<&'static str>,
    #[serde(flatten)]
    pub structure: MultinetStructure,
    pub k: usize,
    pub reduced: bool,
    pub full_support: bool,
    pub weighted_base_count: u64,
    pub direction_count: DirectionCount,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil: Option<PencilRealization>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil_error: Option<String>,
    pub bounds: Vec<MonodromyBound>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultinetSection {
    pub exhaustive: bool,
    pub searches: Vec<SearchRecord>,
    pub multinets: Vec<MultinetEntry>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CertificateOutcome {
    Issued { certificate: MonodromyCertificate },
    NotIssued { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub multinet: usize,
    #[serde(flatten)]
    pub outcome: CertificateOutcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenStatus {
    Exact,
    BoundsOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub lambda: RootOfUnity,
    pub bound: usize,
    pub multinet: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverSummary {
    pub index: u32,
    pub b1: usize,
    /// Torsion coefficients of H₁ of the cover, as decimal strings.
    pub torsion: Vec<String>,
    pub character_dims: Vec<OrderDims>,
    pub trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenSection {
    pub status: EigenStatus,
    /// "wiring" or "presentation" when exact.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinity_line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wiring: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<EigenspaceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSummary>,
    pub bounds: Vec<BoundEntry>,
    pub pullback_checks: Vec<PullbackCheck>,
}

/// A named invariant and whether it held.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}
