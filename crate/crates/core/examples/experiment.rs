//! Runs an experiment config and writes the CSV report.
//!
//! ```text
//! cargo run --release --example experiment -- [config.json] [out.csv]
//! ```
//! Defaults to the bundled battery config and prints the CSV to stdout.

use std::io::Write;
use std::path::PathBuf;

use submodular_secretary::harness::{run_experiment, write_csv, ExperimentConfig};

fn main() -> submodular_secretary::Result<()> {
    let mut args = std::env::args().skip(1);
    let config = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/battery.json"));
    let config = ExperimentConfig::load(config)?;
    let report = run_experiment(&config)?;
    match args.next() {
        Some(out) => write_csv(&report, &out)?,
        None => std::io::stdout().write_all(&report.to_csv()).expect("stdout"),
    }
    Ok(())
}
