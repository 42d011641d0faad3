//! Exhaustive property checks over every subset of a small ground set.

use super::{ElementSet, SetFunction};
use crate::{Error, Result, TOLERANCE};

/// Largest ground set accepted by [`verify_submodular`].
pub const SUBMODULAR_LIMIT: usize = 12;
/// Largest ground set accepted by [`verify_nonnegative`].
pub const NONNEGATIVE_LIMIT: usize = 20;

fn value_table<F: SetFunction + ?Sized>(f: &F, n: usize) -> Vec<f64> {
    (0..1u64 << n)
        .map(|m| f.value(&ElementSet::from_mask(m)))
        .collect()
}

/// Checks `f(S ∪ {v}) − f(S) ≥ f(T ∪ {v}) − f(T)` for every `S ⊆ T ⊆ V`, `v ∉ T`.
pub fn verify_submodular<F: SetFunction + ?Sized>(f: &F) -> Result<bool> {
    let n = f.ground_size();
    if n > SUBMODULAR_LIMIT {
        return Err(Error::SizeLimit {
            what: "verify_submodular",
            limit: SUBMODULAR_LIMIT,
            n,
        });
    }
    let table = value_table(f, n);
    let full = (1u64 << n) - 1;
    for t in 0..=full {
        let outside = full & !t;
        // Enumerate every submask s of t, including t itself and 0.
        let mut s = t;
        loop {
            let mut rest = outside;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let gain_s = table[(s | bit) as usize] - table[s as usize];
                let gain_t = table[(t | bit) as usize] - table[t as usize];
                if gain_s < gain_t - TOLERANCE {
                    return Ok(false);
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & t;
        }
    }
    Ok(true)
}

/// Checks `f(S) ≥ 0` for every `S ⊆ V`.
pub fn verify_nonnegative<F: SetFunction + ?Sized>(f: &F) -> Result<bool> {
    let n = f.ground_size();
    if n > NONNEGATIVE_LIMIT {
        return Err(Error::SizeLimit {
            what: "verify_nonnegative",
            limit: NONNEGATIVE_LIMIT,
            n,
        });
    }
    Ok((0..1u64 << n).all(|m| f.value(&ElementSet::from_mask(m)) >= -TOLERANCE))
}
