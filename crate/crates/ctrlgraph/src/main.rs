use clap::Parser;
use ctrlgraph::cli::{run, Cli};

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("ctrlgraph: {e}");
        std::process::exit(e.exit_code());
    }
}
