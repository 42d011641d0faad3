//! Named verification suites backing `subsec verify`.

use rayon::prelude::*;
use serde::Serialize;

use super::lemmas::{verify_bounded_sampling_lemma, verify_sampling_lemma, LemmaCheck};
use crate::algorithm::run_submodular_secretary;
use crate::arrivals::sample_schedule;
use crate::oracles::{
    sample_random_instance, ElementSet, GeneratorParams, SetFunction, Shifted, ValueOracle,
};
use crate::secretary::{selection_probability_profile, CUTOFF};
use crate::{rng_for, Result};

/// Allowed deviation from `1/e` in the secretary selection checks.
pub const SELECTION_TOLERANCE: f64 = 0.01;
/// Stream lengths covered by the secretary suite.
pub const SECRETARY_SIZES: [usize; 5] = [1, 2, 5, 10, 50];
/// Inclusion probabilities covered by the sampling-lemma suites.
pub const LEMMA_PROBABILITIES: [f64; 5] = [0.0, 0.25, CUTOFF, 0.5, 1.0];
/// Largest sampled set in the sampling-lemma suites.
pub const LEMMA_MAX_SET: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Secretary rule: best element taken w.p. ≥ 1/e, every element w.p. ≤ 1/e.
    Lemma1,
    /// Exact-probability sampling inequality.
    Fmv,
    /// Bounded-probability sampling inequality.
    Bfns,
    All,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub name: String,
    pub observed: f64,
    /// Human-readable acceptance condition.
    pub target: String,
    pub pass: bool,
}

/// Instances the sampling-lemma suites run on, one per oracle kind.
pub fn lemma_oracles(seed: u64) -> Vec<ValueOracle> {
    let n = LEMMA_MAX_SET;
    [
        GeneratorParams::Coverage {
            n,
            universe: 12,
            p: 0.3,
        },
        GeneratorParams::Cut {
            n,
            edge_prob: 0.5,
            max_weight: 5,
        },
        GeneratorParams::Modular { n, max_weight: 9 },
    ]
    .iter()
    .map(|p| sample_random_instance(p, &mut rng_for(seed, 0)).expect("valid generator parameters"))
    .collect()
}

fn lemma_row(suite: &'static str, name: String, check: LemmaCheck) -> CheckRow {
    CheckRow {
        suite,
        name,
        observed: check.estimate,
        target: format!("≥ {:.4} − 3·{:.4}", check.bound, check.stderr),
        pass: check.pass,
    }
}

fn secretary_rows(trials: u64, seed: u64) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for n in SECRETARY_SIZES {
        let weights: Vec<f64> = (1..=n).map(|w| w as f64).collect();
        let profile = selection_probability_profile(&weights, trials, seed)?;
        let best_min = CUTOFF - SELECTION_TOLERANCE;
        let any_max = CUTOFF + SELECTION_TOLERANCE;
        rows.push(CheckRow {
            suite: "lemma1",
            name: format!("n={n} best element"),
            observed: profile.best_frequency,
            target: format!("≥ {best_min:.4}"),
            pass: profile.best_frequency >= best_min,
        });
        rows.push(CheckRow {
            suite: "lemma1",
            name: format!("n={n} max per element"),
            observed: profile.max_frequency(),
            target: format!("≤ {any_max:.4}"),
            pass: profile.max_frequency() <= any_max,
        });
        if n == 1 {
            let f = profile.frequencies[0];
            rows.push(CheckRow {
                suite: "lemma1",
                name: "n=1 selection rate".into(),
                observed: f,
                target: format!("{CUTOFF:.4} ± {SELECTION_TOLERANCE}"),
                pass: (f - CUTOFF).abs() <= SELECTION_TOLERANCE,
            });
        }
    }
    Ok(rows)
}

fn fmv_rows(trials: u64, seed: u64) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for oracle in lemma_oracles(seed) {
        for size in 1..=LEMMA_MAX_SET {
            let a = ElementSet::full(size);
            for p in LEMMA_PROBABILITIES {
                let check = verify_sampling_lemma(&oracle, &a, p, trials, seed)?;
                rows.push(lemma_row(
                    "fmv",
                    format!("{} |A|={size} p={p:.4}", oracle.kind()),
                    check,
                ));
            }
        }
    }
    Ok(rows)
}

/// Per-element probabilities decreasing linearly from `p`.
fn tapered(p: f64, size: usize) -> Vec<f64> {
    (0..size).map(|i| p * (size - i) as f64 / size as f64).collect()
}

fn bfns_rows(trials: u64, seed: u64) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for oracle in lemma_oracles(seed) {
        let shifted = Shifted::new(&oracle, 1.0);
        for size in 1..=LEMMA_MAX_SET {
            let a = ElementSet::full(size);
            for p in LEMMA_PROBABILITIES {
                let probs = tapered(p, size);
                let plain = verify_bounded_sampling_lemma(&oracle, &a, &probs, p, trials, seed)?;
                rows.push(lemma_row(
                    "bfns",
                    format!("{} |A|={size} p={p:.4}", oracle.kind()),
                    plain,
                ));
                let check = verify_bounded_sampling_lemma(&shifted, &a, &probs, p, trials, seed)?;
                rows.push(lemma_row(
                    "bfns",
                    format!("{}+1 |A|={size} p={p:.4}", oracle.kind()),
                    check,
                ));
            }
        }
    }

    let edge = Shifted::new(ValueOracle::cut(2, vec![(0, 1, 2.0)])?, 1.0);
    let check = verify_bounded_sampling_lemma(&edge, &ElementSet::full(2), &[0.3, 0.3], 0.3, trials, seed)?;
    rows.push(lemma_row("bfns", "single edge+1 p=0.3".into(), check));

    // Membership frequencies of the online algorithm's output, capped at 1/e.
    let coverage = lemma_oracles(seed).swap_remove(0);
    let frequencies = output_frequencies(&coverage, 3, trials, seed)?;
    let probs: Vec<f64> = frequencies.iter().map(|&f| f.min(CUTOFF)).collect();
    let shifted = Shifted::new(&coverage, 1.0);
    let check = verify_bounded_sampling_lemma(
        &shifted,
        &ElementSet::full(coverage.ground_size()),
        &probs,
        CUTOFF,
        trials,
        seed,
    )?;
    rows.push(lemma_row(
        "bfns",
        "coverage+1 online-output frequencies p=1/e".into(),
        check,
    ));
    Ok(rows)
}

/// Fraction of runs in which each element ends up in the online algorithm's output.
pub fn output_frequencies<F: SetFunction + ?Sized>(
    oracle: &F,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<f64>> {
    let n = oracle.ground_size();
    let counts = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng_for(seed, t);
            let schedule = sample_schedule(n, &mut rng);
            run_submodular_secretary(oracle, &schedule, k, &mut rng).map(|run| run.solution)
        })
        .try_fold(
            || vec![0u64; n],
            |mut counts, solution| {
                solution?.iter().for_each(|v| counts[v] += 1);
                Ok::<_, crate::Error>(counts)
            },
        )
        .try_reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(counts.iter().map(|&c| c as f64 / trials as f64).collect())
}

/// Runs a suite and returns one row per individual check.
pub fn run_suite(suite: Suite, trials: u64, seed: u64) -> Result<Vec<CheckRow>> {
    match suite {
        Suite::Lemma1 => secretary_rows(trials, seed),
        Suite::Fmv => fmv_rows(trials, seed),
        Suite::Bfns => bfns_rows(trials, seed),
        Suite::All => {
            let mut rows = secretary_rows(trials, seed)?;
            rows.extend(fmv_rows(trials, seed)?);
            rows.extend(bfns_rows(trials, seed)?);
            Ok(rows)
        }
    }
}
