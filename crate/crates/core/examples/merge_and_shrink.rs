// The two constructions behind a classicalisation step.
//
// Run with `cargo run --example merge_and_shrink`.

use swiss_cheese::{
    avoid_disc, closures_intersect, disc_contains, merge_open_discs, ClosedDisc, GeneralizedDisc,
    OpenDisc,
};

pub fn run_example() -> swiss_cheese::Result<()> {
    let a = OpenDisc::at(0.0, 0.0, 1.0)?;
    let b = OpenDisc::at(1.0, 0.0, 1.0)?;
    let merged = merge_open_discs(&a, &b)?;
    println!("merge {:?} + {:?}", a, b);
    println!("  -> center {} radius {}", merged.center(), merged.radius());
    for part in [a, b] {
        assert!(disc_contains(&merged.into(), &part.into())?);
    }
    // Radius never exceeds the sum, so the slack of a cheese cannot drop.
    assert!(merged.radius() <= a.radius() + b.radius());

    let outer = ClosedDisc::at(0.0, 0.0, 2.0)?;
    let hole = OpenDisc::at(2.0, 0.0, 1.0)?;
    let shrunk = avoid_disc(&outer, &hole)?;
    println!("shrink {:?} away from {:?}", outer, hole);
    println!("  -> center {} radius {}", shrunk.center(), shrunk.radius());
    assert!(outer.contains_disc(&shrunk));
    assert!(shrunk.radius() >= outer.radius() - hole.radius());

    let complement = GeneralizedDisc::ComplementOfClosed(shrunk);
    println!(
        "hole still touches the new complement: {}",
        closures_intersect(&hole.into(), &complement)?
    );

    let far = OpenDisc::at(5.0, 0.0, 1.0)?;
    assert_eq!(avoid_disc(&outer, &far)?, outer);
    println!("a disc already outside leaves the outer disc unchanged");
    Ok(())
}

fn main() -> swiss_cheese::Result<()> {
    run_example()
}
