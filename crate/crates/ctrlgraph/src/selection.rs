//! Which subsets of a graph to analyze.

use std::str::FromStr;

use ctrlgraph_core::VertexSet;

use crate::error::{AppError, AppResult};

/// Largest order for which every subset may be enumerated.
pub const SUBSET_GUARD: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// `S = V`.
    Full,
    /// Every singleton.
    Vertices,
    /// All `2^v` subsets.
    All,
    /// One explicit subset, possibly empty.
    List(Vec<usize>),
}

impl FromStr for Selection {
    type Err = AppError;

    /// Accepts `full`, `vertices`, `all`, `none`, or a comma-separated
    /// vertex list such as `0,2,3`.
    fn from_str(s: &str) -> AppResult<Self> {
        match s.trim() {
            "full" => Ok(Selection::Full),
            "vertices" => Ok(Selection::Vertices),
            "all" => Ok(Selection::All),
            "none" | "" => Ok(Selection::List(Vec::new())),
            list => list
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| AppError::Input(format!("bad vertex {x:?} in subset"))))
                .collect::<AppResult<Vec<_>>>()
                .map(Selection::List),
        }
    }
}

impl Selection {
    pub fn expand(&self, order: usize) -> AppResult<Vec<VertexSet>> {
        match self {
            Selection::Full => Ok(vec![VertexSet::full(order)]),
            Selection::Vertices => (0..order).map(|u| single(order, u)).collect(),
            Selection::All => {
                if order > SUBSET_GUARD {
                    return Err(AppError::Guard(format!(
                        "enumerating all subsets needs order <= {SUBSET_GUARD}, got {order}"
                    )));
                }
                Ok(VertexSet::all_subsets(order).collect())
            }
            Selection::List(members) => Ok(vec![VertexSet::new(order, members.iter().copied())?]),
        }
    }
}

fn single(order: usize, u: usize) -> AppResult<VertexSet> {
    Ok(VertexSet::singleton(order, u)?)
}
