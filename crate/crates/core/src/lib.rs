//! Online subset selection for non-negative submodular objectives under a
//! cardinality constraint, where candidates arrive in uniformly random order
//! and every accept/reject decision is irrevocable.
//!
//! The crate is organised bottom-up:
//!
//! * [`oracles`] — value oracles (coverage, graph cut, modular), exhaustive
//!   submodularity and non-negativity checks, random instance generators.
//! * [`arrivals`] — the continuous-time arrival model and the split of the
//!   timeline into `k` equal windows.
//! * [`secretary`] — the single-choice secretary rule with a bounded
//!   per-element selection probability.
//! * [`algorithm`] — the `k`-segment online algorithm plus offline baselines.
//! * [`harness`] — Monte Carlo estimators, lemma checks, experiment configs
//!   and CSV reports.
//!
//! All randomness flows from explicit seeds. Trial `i` of any estimator uses
//! [`rng_for`]`(seed, i)`, so results do not depend on thread scheduling.

pub mod algorithm;
pub mod arrivals;
mod error;
pub mod harness;
pub mod oracles;
pub mod secretary;

pub use error::{Error, Result};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random source used throughout the crate.
pub type Rng = ChaCha8Rng;

/// Deterministic generator for trial `trial` of an experiment seeded with `seed`.
pub fn rng_for(seed: u64, trial: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

/// Absolute tolerance for real-valued comparisons in exhaustive checks.
pub const TOLERANCE: f64 = 1e-9;
