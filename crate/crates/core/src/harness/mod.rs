//! Monte Carlo driver: competitive-ratio estimates, lemma checks,
//! experiment configs and CSV reports.
//!
//! Trial `i` always draws from [`rng_for`]`(seed, i)` and per-trial results
//! are aggregated in trial order, so serial and parallel execution produce
//! bit-identical numbers.

mod experiment;
mod lemmas;
mod stats;
mod suites;

pub use experiment::{
    format_sig6, run_experiment, write_csv, Baseline, ExperimentConfig, InstanceEntry, InstanceSource,
    Report, ReportRow, CSV_HEADER,
};
pub use lemmas::{verify_bounded_sampling_lemma, verify_sampling_lemma, LemmaCheck, SIGMA_SLACK};
pub use stats::{pairwise_sum, Summary};
pub use suites::{run_suite, CheckRow, Suite};

use std::f64::consts::E;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algorithm::{brute_force_opt, run_submodular_secretary, OptResult};
use crate::arrivals::{sample_schedule, segment_of};
use crate::oracles::{sample_random_instance, GeneratorParams, SetFunction, ValueOracle};
use crate::{rng_for, Error, Result};

/// The guaranteed competitive ratio `(e − 1)² / (e²(1 + e)) ≈ 0.1075`.
pub fn competitive_floor() -> f64 {
    (E - 1.0).powi(2) / (E * E * (1.0 + E))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

/// Per-trial outcomes of the online algorithm, in trial order.
#[derive(Debug, Clone, PartialEq)]
pub struct Simulation {
    pub values: Vec<f64>,
    pub oracle_calls: Vec<u64>,
}

impl Simulation {
    pub fn summary(&self) -> Summary {
        Summary::of(&self.values)
    }

    pub fn mean_oracle_calls(&self) -> f64 {
        let calls: Vec<f64> = self.oracle_calls.iter().map(|&c| c as f64).collect();
        Summary::of(&calls).mean
    }
}

/// Runs the online algorithm on `trials` independent arrival schedules.
pub fn simulate<F: SetFunction + ?Sized>(
    oracle: &F,
    k: usize,
    trials: u64,
    seed: u64,
    execution: Execution,
) -> Result<Simulation> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let n = oracle.ground_size();
    let trial = |t: u64| -> Result<(f64, u64)> {
        let mut rng = rng_for(seed, t);
        let schedule = sample_schedule(n, &mut rng);
        let run = run_submodular_secretary(oracle, &schedule, k, &mut rng)?;
        Ok((run.value, run.oracle_calls))
    };
    let results: Vec<(f64, u64)> = match execution {
        Execution::Serial => (0..trials).map(trial).collect::<Result<_>>()?,
        Execution::Parallel => (0..trials).into_par_iter().map(trial).collect::<Result<_>>()?,
    };
    let (values, oracle_calls) = results.into_iter().unzip();
    Ok(Simulation { values, oracle_calls })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioEstimate {
    /// Mean algorithm value divided by the constrained optimum.
    pub ratio: f64,
    pub stderr: f64,
    pub mean_value: f64,
    pub opt: OptResult,
    pub mean_oracle_calls: f64,
}

/// Estimates `E[f(S_k)] / max_{|S|≤k} f(S)` over `trials` random arrival orders.
pub fn estimate_competitive_ratio<F: SetFunction + ?Sized>(
    oracle: &F,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<RatioEstimate> {
    let opt = brute_force_opt(oracle, k)?;
    if opt.value <= 0.0 {
        return Err(Error::DegenerateInstance(
            "optimum value is zero, ratio undefined".into(),
        ));
    }
    let sim = simulate(oracle, k, trials, seed, Execution::Parallel)?;
    let summary = sim.summary();
    Ok(RatioEstimate {
        ratio: summary.mean / opt.value,
        stderr: summary.stderr / opt.value,
        mean_value: summary.mean,
        mean_oracle_calls: sim.mean_oracle_calls(),
        opt,
    })
}

/// Mean number of the `k` windows that receive at least one of `s` uniformly
/// timed elements.
pub fn estimate_segment_hits(k: usize, s: usize, trials: u64, seed: u64) -> Result<Summary> {
    if k == 0 || trials == 0 {
        return Err(Error::Parameter("k and trials must be at least 1".into()));
    }
    let hits: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng_for(seed, t);
            let mut hit = vec![false; k];
            for _ in 0..s {
                hit[segment_of(rng.gen::<f64>(), k) - 1] = true;
            }
            hit.iter().filter(|&&h| h).count() as f64
        })
        .collect();
    Ok(Summary::of(&hits))
}

/// One instance of the fixed evaluation battery.
#[derive(Debug, Clone)]
pub struct BatteryInstance {
    pub id: String,
    pub params: GeneratorParams,
    pub seed: u64,
    pub k: usize,
}

impl BatteryInstance {
    pub fn oracle(&self) -> ValueOracle {
        sample_random_instance(&self.params, &mut rng_for(self.seed, 0))
            .expect("battery parameters are valid")
    }
}

/// Coverage `n=12` with `k ∈ {2,4}`, cut `n=10` with `k ∈ {2,4}`, modular
/// `n=15` with `k ∈ {3,5}`.
pub fn standard_battery() -> Vec<BatteryInstance> {
    let coverage = GeneratorParams::Coverage {
        n: 12,
        universe: 20,
        p: 0.2,
    };
    let cut = GeneratorParams::Cut {
        n: 10,
        edge_prob: 0.5,
        max_weight: 5,
    };
    let modular = GeneratorParams::Modular { n: 15, max_weight: 9 };
    [
        ("coverage-12", coverage, 101, [2, 4]),
        ("cut-10", cut, 202, [2, 4]),
        ("modular-15", modular, 303, [3, 5]),
    ]
    .into_iter()
    .flat_map(|(name, params, seed, ks)| {
        ks.into_iter().map(move |k| BatteryInstance {
            id: format!("{name}-k{k}"),
            params: params.clone(),
            seed,
            k,
        })
    })
    .collect()
}
