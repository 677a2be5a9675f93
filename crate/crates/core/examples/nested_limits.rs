// Limits of nested chains of discs, finite and generator-backed.
//
// Run with `cargo run --example nested_limits`.

use swiss_cheese::geometry::{
    limit_of_nested_closed_chain, limit_of_nested_open_chain, Chain, ChainLimitOptions,
};
use swiss_cheese::{ClosedDisc, OpenDisc};

pub fn run_example() -> swiss_cheese::Result<()> {
    let finite = [
        OpenDisc::at(0.0, 0.0, 1.0)?,
        OpenDisc::at(0.0, 0.0, 1.5)?,
        OpenDisc::at(0.0, 0.0, 2.0)?,
    ];
    let union = limit_of_nested_open_chain(Chain::Finite(&finite), Default::default())?;
    println!("finite union: {union:?}");

    // Growing discs drifting right: E_k = ((1 - 1/k, 0), 2 - 1/k).
    let e = |k: usize| {
        let k = k as f64;
        OpenDisc::at(1.0 - 1.0 / k, 0.0, 2.0 - 1.0 / k)
    };
    let union = limit_of_nested_open_chain(Chain::Generated(&e), ChainLimitOptions::default())?;
    println!("union of E_k: center {} radius {:.9}", union.center(), union.radius());

    // Shrinking closed discs: F_k = ((1/k, 0), 1 + 2/k).
    let f = |k: usize| {
        let k = k as f64;
        ClosedDisc::at(1.0 / k, 0.0, 1.0 + 2.0 / k)
    };
    let options = ChainLimitOptions {
        tolerance: 1e-12,
        max_terms: 100_000,
    };
    let meet = limit_of_nested_closed_chain(Chain::Generated(&f), options)?;
    println!("intersection of F_k: center {} radius {:.9}", meet.center(), meet.radius());

    let vanishing = |k: usize| ClosedDisc::at(0.0, 0.0, 1.0 / k as f64);
    match limit_of_nested_closed_chain(Chain::Generated(&vanishing), options) {
        Err(e) => println!("radii 1/k: {e}"),
        Ok(d) => println!("unexpected limit {d:?}"),
    }
    Ok(())
}

fn main() -> swiss_cheese::Result<()> {
    run_example()
}
