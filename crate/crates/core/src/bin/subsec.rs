use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use submodular_secretary::algorithm::{brute_force_opt, offline_greedy};
use submodular_secretary::harness::{
    format_sig6, run_experiment, run_suite, write_csv, ExperimentConfig, Suite,
};
use submodular_secretary::oracles::{verify_nonnegative, verify_submodular, ValueOracle};

#[derive(Parser)]
#[command(name = "subsec", version, about = "Online submodular selection experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment config and write a CSV report.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the seed in the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run statistical verification suites; exits non-zero if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 200_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustively check an instance for submodularity and non-negativity.
    CheckOracle {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Print the brute-force optimum and the greedy value under |S| <= k.
    Opt {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemma1,
    Fmv,
    Bfns,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lemma1 => Suite::Lemma1,
            SuiteArg::Fmv => Suite::Fmv,
            SuiteArg::Bfns => Suite::Bfns,
            SuiteArg::All => Suite::All,
        }
    }
}

fn run(command: Command) -> submodular_secretary::Result<bool> {
    match command {
        Command::Run { config, out, seed } => {
            let mut config = ExperimentConfig::load(&config)?;
            if let Some(seed) = seed {
                config.seed = seed;
            }
            let report = run_experiment(&config)?;
            write_csv(&report, &out)?;
            for row in &report.rows {
                let ratio = row.ratio.map(format_sig6).unwrap_or_else(|| "-".into());
                println!(
                    "{:<24} n={:<3} k={:<3} mean={:<10} ratio={ratio}",
                    row.instance_id,
                    row.n,
                    row.k,
                    format_sig6(row.mean_value)
                );
            }
            println!("wrote {}", out.display());
            Ok(true)
        }
        Command::Verify { suite, trials, seed } => {
            let rows = run_suite(suite.into(), trials, seed)?;
            println!(
                "{:<7} {:<6} {:<48} {:>10}  target",
                "result", "suite", "check", "observed"
            );
            for r in &rows {
                println!(
                    "{:<7} {:<6} {:<48} {:>10.6}  {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.suite,
                    r.name,
                    r.observed,
                    r.target
                );
            }
            let failed = rows.iter().filter(|r| !r.pass).count();
            println!("{} checks, {} failed", rows.len(), failed);
            Ok(failed == 0)
        }
        Command::CheckOracle { instance } => {
            let oracle = ValueOracle::load(&instance)?;
            println!("{oracle}");
            let nonneg = verify_nonnegative(&oracle)?;
            println!("non-negative: {nonneg}");
            let submod = verify_submodular(&oracle)?;
            println!("submodular:   {submod}");
            Ok(nonneg && submod)
        }
        Command::Opt { instance, k } => {
            let oracle = ValueOracle::load(&instance)?;
            let opt = brute_force_opt(&oracle, k)?;
            let greedy = offline_greedy(&oracle, k);
            println!("{oracle}, k={k}");
            println!("brute-force optimum: {} at {}", format_sig6(opt.value), opt.set);
            println!(
                "greedy:              {} at {}",
                format_sig6(greedy.value),
                greedy.set
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
