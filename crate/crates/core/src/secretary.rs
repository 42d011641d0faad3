//! Single-choice secretary rule with a bounded per-element selection probability.
//!
//! Items arriving before time `1/e` are observed and ignored. If none arrive
//! in that phase the first item is taken only with probability `1/(e·t₁)`;
//! otherwise the first later item whose weight reaches the best ignored weight
//! is taken. The coin keeps every element's selection probability at most
//! `1/e` even for very short streams.

use std::f64::consts::E;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrivals::sample_schedule;
use crate::{rng_for, Error, Result};

/// End of the observation phase, `1/e`.
pub const CUTOFF: f64 = 1.0 / E;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StreamItem {
    pub weight: f64,
    pub time: f64,
}

/// Weighted items in ascending time order. Weights may be negative.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightedStream {
    items: Vec<StreamItem>,
}

impl WeightedStream {
    pub fn new(items: Vec<StreamItem>) -> Result<Self> {
        if let Some(it) = items.iter().find(|it| !(0.0..=1.0).contains(&it.time)) {
            return Err(Error::InvalidStream(format!("time {} outside [0,1]", it.time)));
        }
        if let Some(i) = items.windows(2).position(|w| w[0].time > w[1].time) {
            return Err(Error::InvalidStream(format!(
                "times not sorted at index {}: {} > {}",
                i + 1,
                items[i].time,
                items[i + 1].time
            )));
        }
        Ok(Self { items })
    }

    /// Builds from `(weight, time)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(weight, time)| StreamItem { weight, time })
                .collect(),
        )
    }

    pub fn items(&self) -> &[StreamItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    NoItems,
    FirstItemCoin,
    Threshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SecretaryOutcome {
    /// Index into the stream of the selected item.
    pub selected: Option<usize>,
    /// Best weight seen before the cutoff (threshold branch only).
    pub threshold: Option<f64>,
    pub branch: Branch,
    /// `1/(e·t₁)` (first-item-coin branch only).
    pub coin_probability: Option<f64>,
}

/// Runs the rule over ascending `times`, asking for weights only when needed.
///
/// `weight(i)` is called at most once per index, in increasing index order,
/// and never for items after the selected one. Callers must supply sorted
/// times in `[0,1]`.
pub fn select_online<R, W>(times: &[f64], mut weight: W, rng: &mut R) -> SecretaryOutcome
where
    R: Rng + ?Sized,
    W: FnMut(usize) -> f64,
{
    let Some(&first) = times.first() else {
        return SecretaryOutcome {
            selected: None,
            threshold: None,
            branch: Branch::NoItems,
            coin_probability: None,
        };
    };
    let observed = times.partition_point(|&t| t < CUTOFF);
    if observed == 0 {
        let p = (1.0 / (E * first)).min(1.0);
        let take = rng.gen::<f64>() < p;
        return SecretaryOutcome {
            selected: take.then_some(0),
            threshold: None,
            branch: Branch::FirstItemCoin,
            coin_probability: Some(p),
        };
    }
    let threshold = (0..observed).map(&mut weight).fold(f64::NEG_INFINITY, f64::max);
    let selected = (observed..times.len()).find(|&i| weight(i) >= threshold);
    SecretaryOutcome {
        selected,
        threshold: Some(threshold),
        branch: Branch::Threshold,
        coin_probability: None,
    }
}

/// Runs the rule over a stream with known weights.
pub fn run_modified_secretary<R: Rng + ?Sized>(stream: &WeightedStream, rng: &mut R) -> SecretaryOutcome {
    let times: Vec<f64> = stream.items.iter().map(|it| it.time).collect();
    select_online(&times, |i| stream.items[i].weight, rng)
}

/// Empirical selection frequencies over many random arrival orders.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelectionProfile {
    pub trials: u64,
    /// Fraction of trials in which element `i` was selected.
    pub frequencies: Vec<f64>,
    /// Element with the largest weight.
    pub best: usize,
    pub best_frequency: f64,
}

impl SelectionProfile {
    pub fn max_frequency(&self) -> f64 {
        self.frequencies.iter().copied().fold(0.0, f64::max)
    }

    /// Fraction of trials with any selection.
    pub fn any_frequency(&self) -> f64 {
        self.frequencies.iter().sum()
    }
}

/// Runs `trials` independent arrival orders of elements with the given
/// distinct weights and records how often each element is picked.
pub fn selection_probability_profile(weights: &[f64], trials: u64, seed: u64) -> Result<SelectionProfile> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    let mut sorted = weights.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("weights must be distinct".into()));
    }
    let n = weights.len();
    let counts = (0..trials)
        .into_par_iter()
        .fold(
            || vec![0u64; n],
            |mut counts, trial| {
                let mut rng = rng_for(seed, trial);
                let schedule = sample_schedule(n, &mut rng);
                let arrivals = schedule.arrivals();
                let times: Vec<f64> = arrivals.iter().map(|a| a.time).collect();
                let out = select_online(&times, |i| weights[arrivals[i].element], &mut rng);
                if let Some(i) = out.selected {
                    counts[arrivals[i].element] += 1;
                }
                counts
            },
        )
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let frequencies: Vec<f64> = counts.iter().map(|&c| c as f64 / trials as f64).collect();
    let best = (0..n)
        .max_by(|&a, &b| weights[a].total_cmp(&weights[b]))
        .unwrap_or(0);
    Ok(SelectionProfile {
        trials,
        best_frequency: frequencies.get(best).copied().unwrap_or(0.0),
        frequencies,
        best,
    })
}
