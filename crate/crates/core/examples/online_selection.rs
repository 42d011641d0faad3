//! One run of the k-segment online algorithm with its per-segment trace.

use submodular_secretary::algorithm::{brute_force_opt, run_submodular_secretary};
use submodular_secretary::arrivals::sample_schedule;
use submodular_secretary::oracles::{sample_random_instance, GeneratorParams, SetFunction};
use submodular_secretary::rng_for;

fn main() -> submodular_secretary::Result<()> {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let oracle = sample_random_instance(
        &GeneratorParams::Cut {
            n: 10,
            edge_prob: 0.5,
            max_weight: 5,
        },
        &mut rng_for(202, 0),
    )?;
    let k = 4;
    let mut rng = rng_for(seed, 0);
    let schedule = sample_schedule(oracle.ground_size(), &mut rng);
    println!("arrivals:");
    for a in schedule.arrivals() {
        println!("  t={:.3} element {}", a.time, a.element);
    }

    let run = run_submodular_secretary(&oracle, &schedule, k, &mut rng)?;
    for seg in &run.segments {
        println!(
            "segment {}: {:?} pick={:?} gain={:?} accepted={}",
            seg.index, seg.outcome.branch, seg.element, seg.marginal, seg.accepted
        );
    }
    let opt = brute_force_opt(&oracle, k)?;
    println!(
        "solution {} value {} ({} oracle calls); optimum {} value {}",
        run.solution, run.value, run.oracle_calls, opt.set, opt.value
    );
    Ok(())
}
