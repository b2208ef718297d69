//! The analyze, isocheck and lti commands as plain functions.

use std::str::FromStr;

use ctrlgraph_core::control::{
    full_report, is_charpoly_irreducible, is_controllable_rank, walk_matrix, IRREDUCIBILITY_BOUND,
};
use ctrlgraph_core::iso::{pairs_isomorphic, pairs_isomorphic_by_cone, q_matrix};
use ctrlgraph_core::lti::{
    generating_identity_check, is_controllable, is_observable, recover_state, simulate, transfer_function,
    DiscreteSystem,
};
use ctrlgraph_core::{ControllabilityReport, Graph, Matrix, PairSpec, Scalar, VertexSet};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{AppError, AppResult};
use crate::graph6;
use crate::report::*;
use crate::selection::Selection;

pub fn char_poly_irreducible(g: &Graph) -> AppResult<Option<bool>> {
    if g.order() > IRREDUCIBILITY_BOUND {
        return Ok(None);
    }
    Ok(Some(is_charpoly_irreducible(g)?))
}

pub fn subset_kind(s: &VertexSet) -> &'static str {
    if s.len() == s.order() {
        "full"
    } else if s.len() == 1 {
        "vertex"
    } else {
        "subset"
    }
}

pub fn detail_row(
    line: usize,
    code: &str,
    s: &VertexSet,
    r: &ControllabilityReport,
    irreducible: Option<bool>,
) -> DetailRow {
    DetailRow {
        line,
        graph6: code.to_owned(),
        order: r.order,
        kind: subset_kind(s).to_owned(),
        subset: s.members().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        rank: r.rank,
        dual_degree: r.dual_degree as i64,
        controllable: r.controllable,
        rank_verdict: r.verdicts.rank,
        poles_verdict: r.verdicts.poles,
        coprime_verdict: r.verdicts.coprime,
        phi_irreducible: irreducible,
    }
}

/// Reports for every subset picked by `selection`, plus matching CSV rows.
pub fn analyze(code: &str, selection: &Selection) -> AppResult<(AnalyzeReport, Vec<DetailRow>)> {
    let g = graph6::parse(code)?;
    let code = graph6::encode(&g)?;
    let irreducible = char_poly_irreducible(&g)?;
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    for s in selection.expand(g.order())? {
        let p = PairSpec::from_subset(g.clone(), s.clone())?;
        let r = full_report(&p)?;
        reports.push(PairReport::new(&r, walk_matrix(&p).matrix()));
        rows.push(detail_row(1, &code, &s, &r, irreducible));
    }
    let report = AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        kind: "analyze".into(),
        graph6: code,
        order: g.order(),
        char_poly_irreducible: irreducible,
        reports,
    };
    Ok((report, rows))
}

fn single_subset(order: usize, sel: &Selection) -> AppResult<VertexSet> {
    match sel {
        Selection::Full | Selection::List(_) => Ok(sel.expand(order)?.remove(0)),
        _ => Err(AppError::Input("isocheck needs one subset: a vertex list or \"full\"".into())),
    }
}

pub fn isocheck(code_a: &str, sel_a: &Selection, code_b: &str, sel_b: &Selection) -> AppResult<IsoReport> {
    let (ga, gb) = (graph6::parse(code_a)?, graph6::parse(code_b)?);
    if ga.order() != gb.order() {
        return Err(AppError::Input(format!("orders differ: {} and {}", ga.order(), gb.order())));
    }
    let (sa, sb) = (single_subset(ga.order(), sel_a)?, single_subset(gb.order(), sel_b)?);
    let pa = PairSpec::from_subset(ga.clone(), sa.clone())?;
    let pb = PairSpec::from_subset(gb.clone(), sb.clone())?;
    let by_resolvent = pairs_isomorphic(&pa, &pb)?;
    let by_cone = pairs_isomorphic_by_cone(&ga, &sa, &gb, &sb)?;
    if by_resolvent != by_cone {
        return Err(AppError::Consistency(format!("resolvent route says {by_resolvent}, cone route says {by_cone}")));
    }
    let (ca, cb) = (is_controllable_rank(&pa), is_controllable_rank(&pb));
    let (mut q_json, mut q_checks, mut same) = (None, None, None);
    if by_resolvent && ca && cb {
        // q_matrix verifies all three identities and fails otherwise
        let q = q_matrix(&pa, &pb)?;
        q_checks = Some(QChecks { orthogonal: true, conjugates_adjacency: true, maps_vector: true });
        if ga == gb {
            let a = ga.adjacency();
            let checks = SameGraphChecks {
                symmetric: q.is_symmetric(),
                involution: &q * &q == Matrix::identity(ga.order()),
                commutes_with_adjacency: &q * &a == &a * &q,
            };
            if !(checks.symmetric && checks.involution && checks.commutes_with_adjacency) {
                return Err(AppError::Consistency(format!("Q for a single graph fails {checks:?}")));
            }
            same = Some(checks);
        }
        q_json = Some(matrix_strings(&q));
    }
    Ok(IsoReport {
        schema_version: SCHEMA_VERSION,
        kind: "isocheck".into(),
        a: PairInput { graph6: graph6::encode(&ga)?, subset: sa.members().to_vec() },
        b: PairInput { graph6: graph6::encode(&gb)?, subset: sb.members().to_vec() },
        isomorphic_by_resolvent: by_resolvent,
        isomorphic_by_cone: by_cone,
        isomorphic: by_resolvent,
        controllable_a: ca,
        controllable_b: cb,
        q: q_json,
        q_checks,
        same_graph_checks: same,
    })
}

/// System description read by the lti command. Scalars are JSON integers
/// or strings such as `"-3/4"`. Inputs not listed are zero.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LtiSpec {
    #[serde(rename = "A")]
    pub a: Vec<Vec<Value>>,
    pub b: Vec<Value>,
    pub c: Vec<Value>,
    #[serde(default)]
    pub x0: Option<Vec<Value>>,
    #[serde(default)]
    pub inputs: Vec<Value>,
    pub order: usize,
    #[serde(default)]
    pub recover: Option<RecoverSpec>,
}

/// State recovery request. Without `outputs` the outputs are simulated
/// from `inputs` up to `start` and zero input afterwards.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecoverSpec {
    pub start: usize,
    #[serde(default)]
    pub outputs: Option<Vec<Value>>,
}

fn scalar(v: &Value) -> AppResult<Scalar> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| Scalar::from_integer(x.into()))
            .ok_or_else(|| AppError::Input(format!("{n} is not an integer; write fractions as strings"))),
        Value::String(s) => Scalar::from_str(s.trim()).map_err(|_| AppError::Input(format!("bad rational {s:?}"))),
        other => Err(AppError::Input(format!("expected a number, found {other}"))),
    }
}

fn scalars(vs: &[Value]) -> AppResult<Vec<Scalar>> {
    vs.iter().map(scalar).collect()
}

fn strings(vs: &[Scalar]) -> Vec<String> {
    vs.iter().map(ToString::to_string).collect()
}

pub fn lti(spec: &LtiSpec) -> AppResult<LtiReport> {
    let rows = spec.a.iter().map(|r| scalars(r)).collect::<AppResult<Vec<_>>>()?;
    let d = rows.len();
    let a = Matrix::from_rows(rows)?;
    let x0 = match &spec.x0 {
        Some(x) => scalars(x)?,
        None => vec![Scalar::default(); d],
    };
    let sys = DiscreteSystem::new(a, scalars(&spec.b)?, scalars(&spec.c)?, x0)?;
    let mut inputs = scalars(&spec.inputs)?;
    if inputs.len() < spec.order {
        inputs.resize(spec.order, Scalar::default());
    }
    let tf = transfer_function(&sys)?;
    let check = generating_identity_check(&sys, &inputs, spec.order)?;
    let recovery = spec.recover.as_ref().map(|r| recovery(&sys, &inputs, r)).transpose()?;
    Ok(LtiReport {
        schema_version: SCHEMA_VERSION,
        kind: "lti".into(),
        dimension: d,
        transfer: TransferJson { numerator: poly_strings(tf.numerator()), denominator: poly_strings(tf.denominator()) },
        controllable: is_controllable(&sys)?,
        observable: is_observable(&sys)?,
        identity_check: IdentityJson { order: spec.order, holds: check.holds, first_mismatch: check.first_mismatch },
        recovery,
    })
}

fn recovery(sys: &DiscreteSystem, inputs: &[Scalar], r: &RecoverSpec) -> AppResult<RecoveryJson> {
    let d = sys.dimension();
    let (outputs, expected) = match &r.outputs {
        Some(o) => (scalars(o)?, None),
        None => {
            if inputs.len() < r.start {
                return Err(AppError::Input(format!("recovery at {} needs that many inputs", r.start)));
            }
            let mut u = inputs[..r.start].to_vec();
            u.resize(r.start + d, Scalar::default());
            let traj = simulate(sys, &u, r.start + d)?;
            let outs = traj[r.start..r.start + d].iter().map(|x| sys.output(x)).collect();
            (outs, Some(traj[r.start].clone()))
        }
    };
    Ok(match recover_state(sys, &outputs, r.start) {
        Ok(state) => {
            if expected.as_ref().is_some_and(|e| e != &state) {
                return Err(AppError::Consistency("recovered state differs from the simulation".into()));
            }
            RecoveryJson { start: r.start, state: Some(strings(&state)), error: None }
        }
        Err(ctrlgraph_core::Error::DimensionMismatch { expected, found }) => {
            return Err(AppError::Input(format!("recovery needs {expected} outputs, got {found}")))
        }
        Err(e) => RecoveryJson { start: r.start, state: None, error: Some(e.to_string()) },
    })
}
