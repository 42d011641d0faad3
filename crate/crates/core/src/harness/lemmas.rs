//! Monte Carlo checks of the two sampling inequalities for submodular functions:
//!
//! * every member of `A` kept with probability exactly `p`:
//!   `E[f(A(p))] ≥ (1 − p)·f(∅) + p·f(A)`;
//! * every member kept with probability at most `p`:
//!   `E[f(A(p))] ≥ (1 − p)·f(∅)`.
//!
//! A check passes when the estimate is no more than three standard errors
//! below the bound.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::stats::Summary;
use crate::oracles::{ElementSet, SetFunction};
use crate::{rng_for, Error, Result, TOLERANCE};

/// Standard errors of slack allowed on every statistical pass/fail decision.
pub const SIGMA_SLACK: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub estimate: f64,
    pub stderr: f64,
    pub bound: f64,
    pub pass: bool,
}

impl LemmaCheck {
    fn new(summary: Summary, bound: f64) -> Self {
        Self {
            estimate: summary.mean,
            stderr: summary.stderr,
            bound,
            pass: summary.mean >= bound - SIGMA_SLACK * summary.stderr - TOLERANCE,
        }
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} must lie in [0,1], got {p}")))
    }
}

fn sample_values<F: SetFunction + ?Sized>(
    oracle: &F,
    a: &ElementSet,
    probs: &[f64],
    trials: u64,
    seed: u64,
) -> Result<Summary> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    a.check_within(oracle.ground_size())?;
    let values: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = rng_for(seed, trial);
            let subset: ElementSet = a
                .iter()
                .zip(probs)
                .filter(|&(_, &q)| rng.gen::<f64>() < q)
                .map(|(v, _)| v)
                .collect();
            oracle.value(&subset)
        })
        .collect();
    Ok(Summary::of(&values))
}

/// Keeps each member of `a` independently with probability `p`.
pub fn verify_sampling_lemma<F: SetFunction + ?Sized>(
    oracle: &F,
    a: &ElementSet,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<LemmaCheck> {
    check_probability("p", p)?;
    let summary = sample_values(oracle, a, &vec![p; a.len()], trials, seed)?;
    let bound = (1.0 - p) * oracle.value(&ElementSet::empty()) + p * oracle.value(a);
    Ok(LemmaCheck::new(summary, bound))
}

/// Keeps the `i`-th member of `a` independently with probability `probs[i] ≤ p`.
pub fn verify_bounded_sampling_lemma<F: SetFunction + ?Sized>(
    oracle: &F,
    a: &ElementSet,
    probs: &[f64],
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<LemmaCheck> {
    check_probability("p", p)?;
    if probs.len() != a.len() {
        return Err(Error::InvalidArgument(format!(
            "{} probabilities given for a set of {} elements",
            probs.len(),
            a.len()
        )));
    }
    if let Some(&q) = probs.iter().find(|&&q| !(0.0..=p).contains(&q)) {
        return Err(Error::Parameter(format!(
            "probability {q} is not within [0, {p}]"
        )));
    }
    let summary = sample_values(oracle, a, probs, trials, seed)?;
    let bound = (1.0 - p) * oracle.value(&ElementSet::empty());
    Ok(LemmaCheck::new(summary, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{Shifted, ValueOracle};

    fn modular() -> ValueOracle {
        ValueOracle::modular(vec![3.0, 1.0, 2.0]).unwrap()
    }

    #[test]
    fn degenerate_probabilities_are_exact() {
        let o = ValueOracle::coverage(vec![vec![0, 1], vec![1, 2], vec![3]]);
        let a = ElementSet::full(3);
        let c = verify_sampling_lemma(&o, &a, 0.0, 500, 1).unwrap();
        assert_eq!((c.estimate, c.bound, c.stderr), (0.0, 0.0, 0.0));
        assert!(c.pass);
        let c = verify_sampling_lemma(&o, &a, 1.0, 500, 1).unwrap();
        assert_eq!((c.estimate, c.bound), (4.0, 4.0));
        assert!(c.pass);
    }

    #[test]
    fn modular_is_tight() {
        let c = verify_sampling_lemma(&modular(), &ElementSet::full(3), 0.5, 100_000, 4).unwrap();
        assert_eq!(c.bound, 3.0);
        assert!((c.estimate - 3.0).abs() < SIGMA_SLACK * c.stderr + 0.01);
        assert!(c.pass);
    }

    #[test]
    fn parameter_errors() {
        let o = modular();
        let a = ElementSet::full(3);
        assert!(matches!(
            verify_sampling_lemma(&o, &a, 1.2, 10, 0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            verify_sampling_lemma(&o, &a, 0.5, 0, 0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            verify_bounded_sampling_lemma(&o, &a, &[0.1, 0.4, 0.1], 0.3, 10, 0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            verify_bounded_sampling_lemma(&o, &a, &[0.1], 0.3, 10, 0),
            Err(Error::InvalidArgument(_))
        ));
        let outside = ElementSet::new([5]).unwrap();
        assert!(matches!(
            verify_sampling_lemma(&o, &outside, 0.5, 10, 0),
            Err(Error::InvalidSet(_))
        ));
    }

    #[test]
    fn bounded_with_zero_probabilities() {
        let o = Shifted::new(modular(), 2.0);
        let c = verify_bounded_sampling_lemma(&o, &ElementSet::full(3), &[0.0; 3], 0.0, 100, 0).unwrap();
        assert_eq!((c.estimate, c.bound), (2.0, 2.0));
        assert!(c.pass);
    }

    #[test]
    fn shifted_single_edge() {
        let o = Shifted::new(ValueOracle::cut(2, vec![(0, 1, 2.0)]).unwrap(), 1.0);
        let c =
            verify_bounded_sampling_lemma(&o, &ElementSet::full(2), &[0.3, 0.3], 0.3, 100_000, 8).unwrap();
        assert!((c.bound - 0.7).abs() < 1e-15);
        // E = 1 + 2·2·0.3·0.7 = 1.84
        assert!((c.estimate - 1.84).abs() < 0.01);
        assert!(c.pass);
    }

    #[test]
    fn violation_is_detected() {
        // Concave in |S|, hence submodular: the bound holds.
        let concave =
            crate::oracles::FnSetFunction::new(4, |s: &ElementSet| 16.0 - (4.0 - s.len() as f64).powi(2));
        assert!(
            verify_sampling_lemma(&concave, &ElementSet::full(4), 0.5, 20_000, 2)
                .unwrap()
                .pass
        );
        // |S|² is supermodular: E = 5 against a bound of 8.
        let convex = crate::oracles::FnSetFunction::new(4, |s: &ElementSet| (s.len() * s.len()) as f64);
        assert!(
            !verify_sampling_lemma(&convex, &ElementSet::full(4), 0.5, 20_000, 2)
                .unwrap()
                .pass
        );
    }
}
