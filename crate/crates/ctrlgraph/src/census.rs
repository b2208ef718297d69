//! Batch analysis of graph6 streams.
//!
//! Lines are processed in parallel on a pool of `workers` threads, but
//! results are gathered by line number, so the rows and the summary do not
//! depend on the worker count.

use std::collections::BTreeMap;

use ctrlgraph_core::control::full_report;
use ctrlgraph_core::{PairSpec, VertexSet};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::commands::{char_poly_irreducible, detail_row};
use crate::error::{AppError, AppResult};
use crate::graph6;
use crate::report::{CensusSummary, DetailRow, OrderSummary, SkippedLine, SCHEMA_VERSION};
use crate::selection::SUBSET_GUARD;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `S = V`.
    Full,
    /// Every singleton.
    Vertices,
    /// Every subset, which includes the two above.
    Subsets,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Vertices => "vertices",
            Mode::Subsets => "subsets",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub modes: Vec<Mode>,
    pub workers: usize,
    /// Graphs above this order are skipped and reported.
    pub max_n: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { modes: vec![Mode::Full, Mode::Vertices], workers: 1, max_n: SUBSET_GUARD }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOutput {
    pub summary: CensusSummary,
    pub rows: Vec<DetailRow>,
}

#[derive(Debug)]
struct GraphOutcome {
    order: usize,
    rows: Vec<DetailRow>,
    full: Option<bool>,
    some_vertex: Option<bool>,
    irreducible: Option<bool>,
}

#[derive(Debug)]
enum LineOutcome {
    Blank,
    Malformed(String),
    OverLimit(String),
    Done(GraphOutcome),
    Failed(AppError),
}

fn subsets_for(order: usize, modes: &[Mode]) -> Vec<VertexSet> {
    if modes.contains(&Mode::Subsets) {
        return VertexSet::all_subsets(order).collect();
    }
    let mut sets = Vec::new();
    if modes.contains(&Mode::Full) {
        sets.push(VertexSet::full(order));
    }
    if modes.contains(&Mode::Vertices) {
        for u in 0..order {
            let s = VertexSet::singleton(order, u).expect("in range");
            if !sets.contains(&s) {
                sets.push(s);
            }
        }
    }
    sets
}

fn process(line: usize, text: &str, opts: &CensusOptions) -> LineOutcome {
    if text.trim().is_empty() {
        return LineOutcome::Blank;
    }
    let g = match graph6::parse(text) {
        Ok(g) => g,
        Err(e) => return LineOutcome::Malformed(e.to_string()),
    };
    let n = g.order();
    if n > opts.max_n {
        return LineOutcome::OverLimit(format!("order {n} exceeds --max-n {}", opts.max_n));
    }
    if opts.modes.contains(&Mode::Subsets) && n > SUBSET_GUARD {
        return LineOutcome::OverLimit(format!("order {n} exceeds the subset guard {SUBSET_GUARD}"));
    }
    let run = || -> AppResult<GraphOutcome> {
        let code = graph6::encode(&g)?;
        let irreducible = char_poly_irreducible(&g)?;
        let mut out = GraphOutcome { order: n, rows: Vec::new(), full: None, some_vertex: None, irreducible };
        for s in subsets_for(n, &opts.modes) {
            let r = full_report(&PairSpec::from_subset(g.clone(), s.clone())?)?;
            if s.len() == n {
                out.full = Some(r.controllable);
            }
            if s.len() == 1 {
                out.some_vertex = Some(out.some_vertex.unwrap_or(false) || r.controllable);
            }
            out.rows.push(detail_row(line, &code, &s, &r, irreducible));
        }
        Ok(out)
    };
    match run() {
        Ok(o) => LineOutcome::Done(o),
        Err(e) => LineOutcome::Failed(e),
    }
}

#[derive(Default)]
struct Tally {
    total: usize,
    full: Option<usize>,
    vertex: Option<usize>,
    irreducible: Option<usize>,
    irreducible_known: bool,
}

fn bump(slot: &mut Option<usize>, hit: Option<bool>) {
    if let Some(h) = hit {
        *slot.get_or_insert(0) += h as usize;
    }
}

/// Analyzes every line. Malformed and over-limit lines are skipped and
/// listed in the summary; any other failure aborts the run.
pub fn run_census(lines: &[String], opts: &CensusOptions) -> AppResult<CensusOutput> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| AppError::Io(std::io::Error::other(e)))?;
    let outcomes: Vec<LineOutcome> =
        pool.install(|| lines.par_iter().enumerate().map(|(i, l)| process(i + 1, l, opts)).collect());

    let mut modes: Vec<Mode> = opts.modes.clone();
    modes.sort();
    modes.dedup();
    let mut summary = CensusSummary {
        schema_version: SCHEMA_VERSION,
        kind: "census_summary".into(),
        modes: modes.iter().map(|m| m.name().to_owned()).collect(),
        graphs: 0,
        rows: 0,
        per_order: Vec::new(),
        malformed: Vec::new(),
        over_limit: Vec::new(),
    };
    let mut rows = Vec::new();
    let mut tallies: BTreeMap<usize, Tally> = BTreeMap::new();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let line = i + 1;
        match outcome {
            LineOutcome::Blank => {}
            LineOutcome::Malformed(reason) => summary.malformed.push(SkippedLine { line, reason }),
            LineOutcome::OverLimit(reason) => summary.over_limit.push(SkippedLine { line, reason }),
            LineOutcome::Failed(e) => {
                return Err(match e {
                    AppError::Consistency(m) => AppError::Consistency(format!("line {line}: {m}")),
                    other => other,
                })
            }
            LineOutcome::Done(g) => {
                let t = tallies.entry(g.order).or_insert_with(|| Tally { irreducible_known: true, ..Tally::default() });
                t.total += 1;
                bump(&mut t.full, g.full);
                bump(&mut t.vertex, g.some_vertex);
                t.irreducible_known &= g.irreducible.is_some();
                bump(&mut t.irreducible, g.irreducible);
                summary.graphs += 1;
                rows.extend(g.rows);
            }
        }
    }
    summary.rows = rows.len();
    summary.per_order = tallies
        .into_iter()
        .map(|(order, t)| OrderSummary {
            order,
            total: t.total,
            controllable: t.full,
            with_controllable_vertex: t.vertex,
            irreducible: if t.irreducible_known { t.irreducible.or(Some(0)) } else { None },
            controllable_fraction: t.full.map(|c| format!("{c}/{}", t.total)),
        })
        .collect();
    Ok(CensusOutput { summary, rows })
}

pub fn write_csv<W: std::io::Write>(rows: &[DetailRow], out: W) -> AppResult<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(crate::report::CSV_COLUMNS)?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
