//! Building value oracles, querying them, and checking their properties.

use submodular_secretary::oracles::{
    sample_random_instance, verify_nonnegative, verify_submodular, ElementSet, FnSetFunction,
    GeneratorParams, SetFunction, ValueOracle,
};
use submodular_secretary::rng_for;

fn main() -> submodular_secretary::Result<()> {
    let coverage = ValueOracle::from_json(r#"{"type":"coverage","sets":[[0,1],[1,2],[0]]}"#)?;
    let cut = ValueOracle::cut(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])?;
    let modular = ValueOracle::modular(vec![3.0, 1.0, 2.0])?;

    let s = ElementSet::new([0, 2])?;
    for o in [&coverage, &cut, &modular] {
        println!(
            "{:<14} f({s}) = {:<3} f(1 | {s}) = {:<3} submodular={} non-negative={}",
            o.to_string(),
            o.evaluate(&s)?,
            o.marginal_gain(1, &s)?,
            verify_submodular(o)?,
            verify_nonnegative(o)?,
        );
    }

    // Cut functions are not monotone: adding vertices can lower the value.
    let all = ElementSet::full(3);
    println!(
        "cut: f({{0}}) = {}, f({all}) = {}",
        cut.evaluate(&ElementSet::new([0])?)?,
        cut.evaluate(&all)?
    );

    let squared = FnSetFunction::new(5, |s: &ElementSet| (s.len() * s.len()) as f64);
    println!("|S|² submodular? {}", verify_submodular(&squared)?);

    let params = GeneratorParams::Cut {
        n: 8,
        edge_prob: 0.4,
        max_weight: 5,
    };
    let random = sample_random_instance(&params, &mut rng_for(1, 0))?;
    println!("random instance: {}", random.to_json());
    Ok(())
}
