// Classicalise a small cheese and print its trace.
//
// Run with `cargo run --example classicalise_cheese`.

use swiss_cheese::{classicalise, min_collision, ClosedDisc, DiscAssignment, OpenDisc};

pub fn run_example() -> swiss_cheese::Result<()> {
    // Three overlapping discs in a row, a duplicate of the first, and a small
    // disc poking out of the outer disc.
    let cheese = DiscAssignment::new(
        ClosedDisc::at(0.0, 0.0, 4.5)?,
        [
            (1, OpenDisc::at(0.0, 0.0, 1.0)?),
            (2, OpenDisc::at(1.5, 0.0, 0.8)?),
            (3, OpenDisc::at(3.0, 0.0, 0.9)?),
            (4, OpenDisc::at(0.0, 0.0, 1.0)?),
            (5, OpenDisc::at(-3.0, 3.2, 0.3)?),
        ],
    )?;
    println!("delta {:.4}, least collision {:?}", cheese.delta().delta, min_collision(&cheese));

    let run = classicalise(&cheese, None)?;
    for rec in &run.trace {
        println!(
            "{:?} on ({}, {}): {} -> {}  delta {:.4} -> {:.4}",
            rec.case_tag, rec.pair.n, rec.pair.m, rec.before_n, rec.after_n, rec.delta_before,
            rec.delta_after
        );
    }
    let last = &run.final_assignment;
    println!("stabilised after {} steps, indices {:?}", run.steps, last.indices().collect::<Vec<_>>());
    println!("outer {:?}", last.outer());
    for (i, d) in last.discs() {
        println!("  {i}: {d:?}");
    }
    assert!(last.is_classical());
    assert!(last.delta().delta >= cheese.delta().delta);
    Ok(())
}

fn main() -> swiss_cheese::Result<()> {
    run_example()
}
