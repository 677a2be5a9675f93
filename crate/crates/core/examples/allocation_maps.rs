// Allocation maps induced by each step of a run, and their composition.
//
// Run with `cargo run --example allocation_maps`.

use swiss_cheese::{
    classicalise, step_allocation, trace_allocation, verify_allocation, ClosedDisc,
    DiscAssignment, OpenDisc,
};

pub fn run_example() -> swiss_cheese::Result<()> {
    // Disc 1 crosses the boundary (a shrink), then discs 2 and 3 overlap (a merge).
    let initial = DiscAssignment::new(
        ClosedDisc::at(0.0, 0.0, 5.0)?,
        [
            (1, OpenDisc::at(4.5, 0.0, 1.0)?),
            (2, OpenDisc::at(-2.0, 0.0, 0.5)?),
            (3, OpenDisc::at(-1.5, 0.0, 0.5)?),
            (4, OpenDisc::at(0.0, 3.0, 0.3)?),
        ],
    )?;
    let run = classicalise(&initial, None)?;

    let mut current = initial.clone();
    for rec in &run.trace {
        let map = step_allocation(&current, rec)?;
        println!("step {:?} ({}, {}): {:?}", rec.case_tag, rec.pair.n, rec.pair.m, map.mapping());
        println!("{}", verify_allocation(&map));
        current = map.target().clone();
    }

    let total = trace_allocation(&initial, &run.trace)?;
    println!("composed: {:?}", total.mapping());
    println!("sent to the complement: {:?}", total.sent_to_complement());
    let report = verify_allocation(&total);
    println!("{report}");
    assert!(report.holds());
    Ok(())
}

fn main() -> swiss_cheese::Result<()> {
    run_example()
}
