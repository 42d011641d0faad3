//! Empirical competitive ratios on the evaluation battery against the
//! guaranteed floor.

use submodular_secretary::algorithm::offline_greedy;
use submodular_secretary::harness::{competitive_floor, estimate_competitive_ratio, standard_battery};

fn main() -> submodular_secretary::Result<()> {
    let trials = 50_000;
    let floor = competitive_floor();
    println!("guaranteed floor {floor:.4}, {trials} trials per instance\n");
    println!(
        "{:<16} {:>6} {:>8} {:>8} {:>8} {:>8}",
        "instance", "opt", "greedy", "mean", "ratio", "stderr"
    );
    for inst in standard_battery() {
        let oracle = inst.oracle();
        let est = estimate_competitive_ratio(&oracle, inst.k, trials, 0)?;
        println!(
            "{:<16} {:>6} {:>8} {:>8.3} {:>8.4} {:>8.4}",
            inst.id,
            est.opt.value,
            offline_greedy(&oracle, inst.k).value,
            est.mean_value,
            est.ratio,
            est.stderr
        );
    }
    Ok(())
}
