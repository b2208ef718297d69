//! Argument parsing and dispatch for the `ctrlgraph` binary.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{run_census, write_csv, CensusOptions, Mode};
use crate::commands::{analyze, isocheck, lti, LtiSpec};
use crate::error::{AppError, AppResult};
use crate::selection::{Selection, SUBSET_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "ctrlgraph", version, about = "Exact controllability analysis of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report on one graph and a choice of subsets.
    Analyze {
        /// The graph in graph6.
        graph6: String,
        /// `full`, `vertices`, `all`, `none`, or a list such as `0,2`.
        #[arg(long, default_value = "full")]
        subset: Selection,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every graph6 line of a file or of standard input.
    Census {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',', default_values = ["full", "vertices"])]
        mode: Vec<Mode>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// `csv` writes detail rows; `json` writes the summary and rows together.
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the JSON summary; standard error if absent.
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Exit 0 even when lines were malformed or over the size limit.
        #[arg(long)]
        lenient: bool,
        #[arg(long, default_value_t = SUBSET_GUARD)]
        max_n: usize,
    },
    /// Decide whether two pairs (graph, subset) are isomorphic, by two routes.
    Isocheck {
        graph6_a: String,
        subset_a: Selection,
        graph6_b: String,
        subset_b: Selection,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a discrete linear system described in JSON (`-` for stdin).
    Lti {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn sink(out: &Option<PathBuf>) -> AppResult<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: serde::Serialize>(value: &T, out: &Option<PathBuf>) -> AppResult<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn read_lines(input: &Option<PathBuf>) -> AppResult<Vec<String>> {
    let reader: Box<dyn BufRead> = match input {
        Some(p) => {
            Box::new(BufReader::new(File::open(p).map_err(|e| AppError::Input(format!("{}: {e}", p.display())))?))
        }
        None => Box::new(BufReader::new(io::stdin().lock())),
    };
    // lines that are not UTF-8 are kept (lossily) so they get reported as malformed
    reader
        .split(b'\n')
        .map(|l| l.map(|b| String::from_utf8_lossy(&b).trim_end_matches('\r').to_owned()).map_err(AppError::from))
        .collect()
}

pub fn run(cli: Cli) -> AppResult<()> {
    match cli.command {
        Command::Analyze { graph6, subset, format, out } => {
            let (report, rows) = analyze(&graph6, &subset)?;
            match format {
                Format::Json => write_json(&report, &out),
                Format::Csv => write_csv(&rows, sink(&out)?),
            }
        }
        Command::Census { input, mode, workers, format, out, summary, lenient, max_n } => {
            let lines = read_lines(&input)?;
            let opts = CensusOptions { modes: mode, workers, max_n };
            let result = run_census(&lines, &opts)?;
            match format {
                Format::Csv => write_csv(&result.rows, sink(&out)?)?,
                Format::Json => write_json(&result, &out)?,
            }
            match &summary {
                Some(_) => write_json(&result.summary, &summary)?,
                None if format == Format::Csv => {
                    let mut err = io::stderr().lock();
                    serde_json::to_writer_pretty(&mut err, &result.summary)?;
                    writeln!(err)?;
                }
                None => {}
            }
            if lenient {
                return Ok(());
            }
            if !result.summary.malformed.is_empty() {
                return Err(AppError::Input(format!("{} malformed line(s)", result.summary.malformed.len())));
            }
            if !result.summary.over_limit.is_empty() {
                return Err(AppError::Guard(format!(
                    "{} line(s) over the size limit",
                    result.summary.over_limit.len()
                )));
            }
            Ok(())
        }
        Command::Isocheck { graph6_a, subset_a, graph6_b, subset_b, out } => {
            write_json(&isocheck(&graph6_a, &subset_a, &graph6_b, &subset_b)?, &out)
        }
        Command::Lti { spec, out } => {
            let text = if spec.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&spec).map_err(|e| AppError::Input(format!("{}: {e}", spec.display())))?
            };
            let spec: LtiSpec = serde_json::from_str(&text)?;
            write_json(&lti(&spec)?, &out)
        }
    }
}
