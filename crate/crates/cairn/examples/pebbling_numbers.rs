//! Pebbling numbers for the stock families, with the extremal failing
//! starts that certify each value is tight.
//!
//! Run with: cargo run --example pebbling_numbers

use cairn::error::Result;
use cairn::families;
use cairn::numbers::{self, Value};

fn main() -> Result<()> {
    // pi(G) is the least N such that every N-pebble start reaches every
    // single-vertex target. The result carries a failing start of size
    // N-1 as the tightness certificate.
    for n in 2..=6 {
        let path = families::path(n)?;
        let r = numbers::pi_graph(&path)?;
        println!(
            "pi(path on {n}) = {:>2}   largest failing start {:?}",
            r.value,
            r.witness_failure.as_ref().unwrap().counts()
        );
    }

    // Cycles alternate between a clean power of two (even length) and a
    // rounded two-thirds power (odd length); the closed form is checked
    // against the search for each length.
    for n in 3..=8 {
        let cycle = families::cycle(n)?;
        let r = numbers::pi_graph(&cycle)?;
        let closed = numbers::cycle_closed_form(n)?;
        assert_eq!(r.value, Value::Finite(closed));
        println!("pi(cycle on {n}) = {:>2} = closed form", r.value);
    }

    // The 3-cube: distance-3 corners force 2^3 pebbles and 8 is enough.
    let cube = families::hypercube(3)?;
    let r = numbers::pi_graph(&cube)?;
    println!("pi(3-cube) = {}", r.value);
    assert_eq!(r.value, Value::Finite(8));

    // Whole-graph numbers are set queries over all single-vertex targets;
    // a disconnected graph has no finite answer and says so.
    let two_islands = cairn::Graph::new(2, &[])?;
    let r = numbers::pi_graph(&two_islands)?;
    println!("pi(two isolated vertices) = {}", r.value);
    assert_eq!(r.value, Value::Infinite);
    Ok(())
}
