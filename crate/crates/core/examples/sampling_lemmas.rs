//! Monte Carlo checks of the random-subset inequalities for submodular functions.

use submodular_secretary::harness::{verify_bounded_sampling_lemma, verify_sampling_lemma, LemmaCheck};
use submodular_secretary::oracles::{ElementSet, FnSetFunction, Shifted, ValueOracle};

fn show(label: &str, c: LemmaCheck) {
    println!(
        "{label:<40} E[f(A(p))]={:<8.4} bound={:<8.4} stderr={:.4} {}",
        c.estimate,
        c.bound,
        c.stderr,
        if c.pass { "pass" } else { "FAIL" }
    );
}

fn main() -> submodular_secretary::Result<()> {
    let trials = 100_000;
    let coverage = ValueOracle::coverage(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3, 4]]);
    let a = ElementSet::full(4);
    for p in [0.0, 0.25, 0.5, 1.0] {
        show(
            &format!("coverage, exact p={p}"),
            verify_sampling_lemma(&coverage, &a, p, trials, 0)?,
        );
    }

    let edge = Shifted::new(ValueOracle::cut(2, vec![(0, 1, 2.0)])?, 1.0);
    let check = verify_bounded_sampling_lemma(&edge, &ElementSet::full(2), &[0.3, 0.1], 0.3, trials, 0)?;
    show("shifted edge, probabilities ≤ 0.3", check);

    // A supermodular function breaks the first inequality.
    let squared = FnSetFunction::new(4, |s: &ElementSet| (s.len() * s.len()) as f64);
    show(
        "|S|² (supermodular), p=0.5",
        verify_sampling_lemma(&squared, &a, 0.5, trials, 0)?,
    );
    Ok(())
}
