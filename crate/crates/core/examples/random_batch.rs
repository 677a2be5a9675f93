// Generate seeded random cheeses, classicalise them and verify every run.
//
// Run with `cargo run --release --example random_batch -- 200`.

use swiss_cheese::cli::document::GeneratorParams;
use swiss_cheese::cli::generate::generate;
use swiss_cheese::{classicalise, verify_run};

pub fn run_batch(count: u64) -> swiss_cheese::Result<()> {
    let (mut steps, mut discs, mut worst_gain) = (0, 0, f64::INFINITY);
    for seed in 0..count {
        let params = GeneratorParams {
            seed,
            discs: 3 + (seed as usize * 7) % 48,
            delta_min: 0.1,
            outer_r: 3.0,
        };
        let initial = generate(&params)?.to_assignment()?;
        let run = classicalise(&initial, None)?;
        let report = verify_run(&run, &initial, 2_000, seed);
        assert!(report.passed(), "seed {seed}:\n{report}");
        steps += run.steps;
        discs += params.discs;
        worst_gain = worst_gain.min(run.final_assignment.delta().delta - initial.delta().delta);
    }
    println!("{count} cheeses, {discs} discs, {steps} steps, all verified");
    println!("smallest slack gain: {worst_gain:e}");
    Ok(())
}

pub fn run_example() -> swiss_cheese::Result<()> {
    run_batch(20)
}

fn main() -> swiss_cheese::Result<()> {
    let count = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    run_batch(count)
}
