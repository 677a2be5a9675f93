// The verifier recomputes everything from a trace, so edited traces fail.
//
// Run with `cargo run --example tamper_detection`.

use swiss_cheese::{
    classicalise, sample_containment, stabilised_iff_classical, verify_run, verify_step,
    ClosedDisc, DiscAssignment, GeneralizedDisc, OpenDisc,
};

fn show(label: &str, report: &swiss_cheese::VerificationReport) {
    println!("{label}: passed={}", report.passed());
    for f in report.failures.iter().take(2) {
        println!("  {}: {}", f.check, f.witness);
    }
}

pub fn run_example() -> swiss_cheese::Result<()> {
    let initial = DiscAssignment::new(
        ClosedDisc::at(0.0, 0.0, 5.0)?,
        [
            (1, OpenDisc::at(0.0, 0.0, 1.0)?),
            (2, OpenDisc::at(1.5, 0.0, 1.0)?),
            (3, OpenDisc::at(3.0, 0.0, 1.0)?),
        ],
    )?;
    let run = classicalise(&initial, None)?;
    show("genuine run", &verify_run(&run, &initial, 10_000, 1));

    let mut dropped = run.clone();
    dropped.trace.remove(0);
    dropped.steps -= 1;
    show("record deleted", &verify_run(&dropped, &initial, 1_000, 1));

    let mut overclaimed = run.clone();
    overclaimed.trace[0].delta_after += 1.0;
    show("slack overclaimed", &verify_run(&overclaimed, &initial, 1_000, 1));

    // Shrink the first merged disc by 10%.
    let rec = &run.trace[0];
    let merged = *rec.after_n.as_open().expect("first step merges");
    let shrunk = OpenDisc::new(merged.center(), merged.radius() * 0.9)?;
    let mut after = DiscAssignment::from_entries(
        initial.entries().filter(|&(i, _)| i != rec.removed_index),
    )?;
    after = DiscAssignment::from_entries(after.entries().map(|(i, g)| {
        (i, if i == rec.pair.n { GeneralizedDisc::Open(shrunk) } else { g })
    }))?;
    let mut forged = rec.clone();
    forged.after_n = shrunk.into();
    show("shrunk merge, step check", &verify_step(&initial, &after, &forged));
    show("shrunk merge, sampling", &sample_containment(&after, &initial, 10_000, 2));

    let mut unfinished = classicalise(&initial, Some(1))?;
    println!("truncated run consistent: {}", stabilised_iff_classical(&unfinished));
    unfinished.stabilised = true;
    println!("after flipping the flag: {}", stabilised_iff_classical(&unfinished));
    Ok(())
}

fn main() -> swiss_cheese::Result<()> {
    run_example()
}
