//! The single-choice secretary rule on hand-made streams and its
//! empirical selection probabilities.

use submodular_secretary::rng_for;
use submodular_secretary::secretary::{
    run_modified_secretary, selection_probability_profile, WeightedStream, CUTOFF,
};

fn main() -> submodular_secretary::Result<()> {
    let streams = [
        vec![(5.0, 0.2), (9.0, 0.7)],
        vec![(9.0, 0.2), (5.0, 0.7)],
        vec![(7.0, 0.5), (3.0, 0.8)],
        vec![],
    ];
    for pairs in &streams {
        let stream = WeightedStream::from_pairs(pairs)?;
        let out = run_modified_secretary(&stream, &mut rng_for(0, 0));
        println!("{pairs:?}\n    -> {out:?}");
    }

    println!("\nselection frequencies over 200000 random orders (1/e = {CUTOFF:.4}):");
    for n in [1usize, 2, 5, 10, 50] {
        let weights: Vec<f64> = (1..=n).map(|w| w as f64).collect();
        let p = selection_probability_profile(&weights, 200_000, 0)?;
        println!(
            "  n={n:<3} best={:.4} max per element={:.4} any={:.4}",
            p.best_frequency,
            p.max_frequency(),
            p.any_frequency()
        );
    }
    Ok(())
}
