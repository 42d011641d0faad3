//! Value oracles.
//!
//! A [`SetFunction`] is only ever observed through evaluation queries. The
//! shipped [`ValueOracle`] kinds are all non-negative and submodular:
//!
//! * coverage: `f(S) = |∪_{v∈S} C_v|` (monotone),
//! * cut: total weight of undirected edges with exactly one endpoint in `S`
//!   (non-monotone),
//! * modular: `f(S) = Σ_{v∈S} w_v` with `w_v ≥ 0`.

mod generate;
mod instances;
mod set;
mod verify;

pub use generate::{sample_random_instance, GeneratorParams};
pub use instances::{CoverageOracle, CutOracle, FnSetFunction, ModularOracle, Shifted, ValueOracle};
pub use set::ElementSet;
pub use verify::{verify_nonnegative, verify_submodular, NONNEGATIVE_LIMIT, SUBMODULAR_LIMIT};

use crate::{Error, Result};

/// A set function `f: 2^V → R` over the ground set `V = 0..ground_size()`.
pub trait SetFunction: Sync {
    fn ground_size(&self) -> usize;

    /// Value of a set already known to lie inside the ground set.
    fn value(&self, set: &ElementSet) -> f64;

    /// Checked evaluation.
    fn evaluate(&self, set: &ElementSet) -> Result<f64> {
        set.check_within(self.ground_size())?;
        Ok(self.value(set))
    }

    /// `f(v | S) = f(S ∪ {v}) − f(S)`. May be negative.
    fn marginal_gain(&self, v: usize, set: &ElementSet) -> Result<f64> {
        let n = self.ground_size();
        set.check_within(n)?;
        if v >= n {
            return Err(Error::InvalidSet(format!(
                "element id {v} out of range for ground set of size {n}"
            )));
        }
        if set.contains(v) {
            return Err(Error::InvalidArgument(format!("element {v} is already in {set}")));
        }
        Ok(self.value(&set.with(v)) - self.value(set))
    }
}

impl<F: SetFunction + ?Sized> SetFunction for &F {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        (**self).value(set)
    }
}
