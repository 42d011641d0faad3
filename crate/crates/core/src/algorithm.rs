//! The `k`-segment online algorithm and the offline baselines it is measured against.

use rand::Rng;
use serde::Serialize;

use crate::arrivals::{partition_segments, ArrivalSchedule, Segment};
use crate::oracles::{ElementSet, SetFunction};
use crate::secretary::{select_online, SecretaryOutcome};
use crate::{Error, Result};

/// Largest ground set accepted by [`brute_force_opt`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SegmentRecord {
    /// 1-based segment index.
    pub index: usize,
    pub outcome: SecretaryOutcome,
    /// Element picked by the secretary rule, if any.
    pub element: Option<usize>,
    /// Whether the pick entered the solution.
    pub accepted: bool,
    /// Marginal gain of the pick against the solution at segment start.
    pub marginal: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunResult {
    pub solution: ElementSet,
    pub value: f64,
    pub segments: Vec<SegmentRecord>,
    /// Exact number of set evaluations issued.
    pub oracle_calls: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptResult {
    pub set: ElementSet,
    pub value: f64,
}

/// Marginal gains against a fixed base set, each computed at most once.
struct MarginalCache<'a, F: ?Sized> {
    oracle: &'a F,
    base: &'a ElementSet,
    base_value: f64,
    segment: &'a Segment,
    extended: Vec<Option<f64>>,
    calls: u64,
}

impl<'a, F: SetFunction + ?Sized> MarginalCache<'a, F> {
    fn new(oracle: &'a F, base: &'a ElementSet, base_value: f64, segment: &'a Segment) -> Self {
        Self {
            oracle,
            base,
            base_value,
            segment,
            extended: vec![None; segment.items.len()],
            calls: 0,
        }
    }

    /// `f(S ∪ {v})` for the `i`-th item of the segment.
    fn extended_value(&mut self, i: usize) -> f64 {
        if let Some(v) = self.extended[i] {
            return v;
        }
        self.calls += 1;
        let v = self.oracle.value(&self.base.with(self.segment.items[i].element));
        self.extended[i] = Some(v);
        v
    }

    fn marginal(&mut self, i: usize) -> f64 {
        self.extended_value(i) - self.base_value
    }
}

/// Runs the online algorithm on one arrival schedule.
///
/// The timeline is split into `k` equal windows. Within window `l` the
/// secretary rule runs on rescaled local times with weights
/// `f(v | S_{l−1})`; its pick is added when that gain is non-negative.
pub fn run_submodular_secretary<F, R>(
    oracle: &F,
    schedule: &ArrivalSchedule,
    k: usize,
    rng: &mut R,
) -> Result<RunResult>
where
    F: SetFunction + ?Sized,
    R: Rng + ?Sized,
{
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let n = oracle.ground_size();
    if schedule.len() != n {
        return Err(Error::InvalidArgument(format!(
            "schedule has {} arrivals but the ground set has {n} elements",
            schedule.len()
        )));
    }
    let segments = partition_segments(schedule, k)?;
    let mut solution = ElementSet::empty();
    let mut value = oracle.value(&solution);
    let mut oracle_calls = 1;
    let mut records = Vec::with_capacity(k);

    for segment in &segments {
        let times = segment.local_times();
        let mut cache = MarginalCache::new(oracle, &solution, value, segment);
        let outcome = select_online(&times, |i| cache.marginal(i), rng);
        let pick = outcome
            .selected
            .map(|i| (i, cache.marginal(i), cache.extended_value(i)));
        oracle_calls += cache.calls;

        let mut record = SegmentRecord {
            index: segment.index,
            outcome,
            element: None,
            accepted: false,
            marginal: None,
        };
        if let Some((i, gain, extended)) = pick {
            let element = segment.items[i].element;
            record.element = Some(element);
            record.marginal = Some(gain);
            if gain >= 0.0 {
                solution.insert(element);
                value = extended;
                record.accepted = true;
            }
        }
        records.push(record);
    }

    Ok(RunResult {
        solution,
        value,
        segments: records,
        oracle_calls,
    })
}

/// Exact `max_{|S| ≤ k} f(S)` by enumeration; ties go to the
/// lexicographically smallest member list.
pub fn brute_force_opt<F: SetFunction + ?Sized>(oracle: &F, k: usize) -> Result<OptResult> {
    let n = oracle.ground_size();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            what: "brute_force_opt",
            limit: BRUTE_FORCE_LIMIT,
            n,
        });
    }
    let mut best = OptResult {
        set: ElementSet::empty(),
        value: oracle.value(&ElementSet::empty()),
    };
    for mask in 1..1u64 << n {
        if mask.count_ones() as usize > k {
            continue;
        }
        let set = ElementSet::from_mask(mask);
        let value = oracle.value(&set);
        if value > best.value || (value == best.value && set < best.set) {
            best = OptResult { set, value };
        }
    }
    Ok(best)
}

/// Repeatedly adds the element with the largest marginal gain, smallest id
/// first on ties, while that gain is positive and fewer than `k` are chosen.
pub fn offline_greedy<F: SetFunction + ?Sized>(oracle: &F, k: usize) -> OptResult {
    let n = oracle.ground_size();
    let mut set = ElementSet::empty();
    let mut value = oracle.value(&set);
    while set.len() < k {
        let mut best: Option<(usize, f64)> = None;
        for v in (0..n).filter(|&v| !set.contains(v)) {
            let candidate = oracle.value(&set.with(v));
            if best.is_none_or(|(_, b)| candidate > b) {
                best = Some((v, candidate));
            }
        }
        match best {
            Some((v, candidate)) if candidate - value > 0.0 => {
                set.insert(v);
                value = candidate;
            }
            _ => break,
        }
    }
    OptResult { set, value }
}

/// Expected number of the `k` windows hit by a fixed `s`-subset under
/// uniform arrivals: `k·(1 − (1 − 1/k)^s)`.
pub fn expected_segment_hits(k: usize, s: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if s > k {
        return Err(Error::Parameter(format!("subset size {s} exceeds k = {k}")));
    }
    let k = k as f64;
    Ok(k * (1.0 - (1.0 - 1.0 / k).powi(s as i32)))
}
