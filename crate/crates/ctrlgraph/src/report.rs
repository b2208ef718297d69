//! Serializable report documents.
//!
//! Every integer that can grow without bound (polynomial coefficients,
//! walk-matrix entries, rational matrix entries) is written as a decimal
//! string; rationals use `p/q` with `q > 1`, or just `p`.

use ctrlgraph_core::{ControllabilityReport, IntPoly, Matrix, Radius};
use serde::{Deserialize, Serialize};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

pub fn poly_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RadiusJson {
    Finite(usize),
    Infinite(InfiniteTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InfiniteTag {
    Infinite,
}

impl From<Radius> for RadiusJson {
    fn from(r: Radius) -> Self {
        match r {
            Radius::Finite(k) => RadiusJson::Finite(k),
            Radius::Infinite => RadiusJson::Infinite(InfiniteTag::Infinite),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictsJson {
    pub rank: bool,
    pub poles: bool,
    pub coprime: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub subset: Vec<usize>,
    pub rank: usize,
    pub support_size: usize,
    pub dual_degree: i64,
    pub covering_radius: Option<RadiusJson>,
    pub covering_bound_holds: Option<bool>,
    pub controllable: bool,
    pub verdicts: VerdictsJson,
    pub degenerate: bool,
    /// Coefficients of `phi`, constant term first.
    pub char_poly: Vec<String>,
    /// Coefficients of `phi_S`, constant term first.
    pub numerator: Vec<String>,
    pub walk_matrix: Vec<Vec<String>>,
}

impl PairReport {
    pub fn new(r: &ControllabilityReport, walk: &Matrix) -> Self {
        PairReport {
            subset: r.subset.as_ref().map(|s| s.members().to_vec()).unwrap_or_default(),
            rank: r.rank,
            support_size: r.support_size,
            dual_degree: r.dual_degree as i64,
            covering_radius: r.covering_radius.map(Into::into),
            covering_bound_holds: r.covering_bound_holds,
            controllable: r.controllable,
            verdicts: VerdictsJson { rank: r.verdicts.rank, poles: r.verdicts.poles, coprime: r.verdicts.coprime },
            degenerate: r.degenerate,
            char_poly: poly_strings(&r.char_poly),
            numerator: poly_strings(&r.numerator),
            walk_matrix: matrix_strings(walk),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub kind: String,
    pub graph6: String,
    pub order: usize,
    /// `None` above the irreducibility size bound.
    pub char_poly_irreducible: Option<bool>,
    pub reports: Vec<PairReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairInput {
    pub graph6: String,
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QChecks {
    pub orthogonal: bool,
    pub conjugates_adjacency: bool,
    pub maps_vector: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SameGraphChecks {
    pub symmetric: bool,
    pub involution: bool,
    pub commutes_with_adjacency: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub schema_version: u32,
    pub kind: String,
    pub a: PairInput,
    pub b: PairInput,
    pub isomorphic_by_resolvent: bool,
    pub isomorphic_by_cone: bool,
    pub isomorphic: bool,
    pub controllable_a: bool,
    pub controllable_b: bool,
    /// `W_T W_S^{-1}`, present when both pairs are controllable and isomorphic.
    pub q: Option<Vec<Vec<String>>>,
    pub q_checks: Option<QChecks>,
    pub same_graph_checks: Option<SameGraphChecks>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferJson {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub order: usize,
    pub holds: bool,
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveryJson {
    pub start: usize,
    pub state: Option<Vec<String>>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtiReport {
    pub schema_version: u32,
    pub kind: String,
    pub dimension: usize,
    pub transfer: TransferJson,
    pub controllable: bool,
    pub observable: bool,
    pub identity_check: IdentityJson,
    pub recovery: Option<RecoveryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub order: usize,
    pub total: usize,
    /// Graphs with `(X, V)` controllable; `None` unless the full set was analyzed.
    pub controllable: Option<usize>,
    /// Graphs with at least one controllable vertex; `None` unless singletons were analyzed.
    pub with_controllable_vertex: Option<usize>,
    /// Graphs whose characteristic polynomial is irreducible over the rationals.
    pub irreducible: Option<usize>,
    /// `controllable / total` as an exact fraction.
    pub controllable_fraction: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub schema_version: u32,
    pub kind: String,
    pub modes: Vec<String>,
    pub graphs: usize,
    pub rows: usize,
    pub per_order: Vec<OrderSummary>,
    pub malformed: Vec<SkippedLine>,
    pub over_limit: Vec<SkippedLine>,
}

/// One CSV detail row; field order is the column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetailRow {
    pub line: usize,
    pub graph6: String,
    pub order: usize,
    /// `full`, `vertex` or `subset`.
    pub kind: String,
    /// Vertices separated by spaces.
    pub subset: String,
    pub rank: usize,
    pub dual_degree: i64,
    pub controllable: bool,
    pub rank_verdict: bool,
    pub poles_verdict: bool,
    pub coprime_verdict: Option<bool>,
    pub phi_irreducible: Option<bool>,
}

pub const CSV_COLUMNS: [&str; 12] = [
    "line",
    "graph6",
    "order",
    "kind",
    "subset",
    "rank",
    "dual_degree",
    "controllable",
    "rank_verdict",
    "poles_verdict",
    "coprime_verdict",
    "phi_irreducible",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_serialization() {
        assert_eq!(serde_json::to_string(&RadiusJson::from(Radius::Finite(3))).unwrap(), "3");
        assert_eq!(serde_json::to_string(&RadiusJson::from(Radius::Infinite)).unwrap(), "\"infinite\"");
    }

    #[test]
    fn big_values_are_strings() {
        let p = IntPoly::from_i64s(&[i64::MAX, 0, 1]);
        let sq = &p * &p;
        let s = poly_strings(&sq);
        assert_eq!(s[0], "85070591730234615847396907784232501249");
    }
}
