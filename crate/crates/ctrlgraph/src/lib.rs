//! graph6 ingestion, JSON and CSV reports, a parallel census and the
//! command line on top of `ctrlgraph-core`.

pub mod census;
pub mod cli;
pub mod commands;
pub mod error;
pub mod graph6;
pub mod report;
pub mod selection;

pub use ctrlgraph_core as core;
pub use error::{AppError, AppResult};
