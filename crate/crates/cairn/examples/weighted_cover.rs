//! Cover pebbling on a weighted graph, and why "enough pebbles on one
//! vertex" does not mean "enough pebbles anywhere": concentration can
//! beat a split pile.
//!
//! Run with: cargo run --example weighted_cover

use cairn::distribution::{self, Distribution};
use cairn::error::Result;
use cairn::families;
use cairn::numbers::{self, Value};
use cairn::solver;

fn main() -> Result<()> {
    // K4 with one light edge (weight 2) and five heavy edges (weight 5).
    // The cover target wants one pebble on every vertex at once.
    let k4 = families::weighted_k4(2, 5);
    let cover = distribution::gamma_target(&k4);

    // From any single vertex, 13 pebbles cover the graph and 12 do not.
    let threshold = numbers::single_vertex_threshold(&k4, &cover)?;
    println!("single-vertex cover threshold = {threshold}");
    assert_eq!(threshold, Value::Finite(13));
    for v in 0..k4.n() {
        let pile = distribution::delta(&k4, v)?.scale(13);
        assert!(solver::is_reachable(&k4, &pile, &cover)?.is_some());
        let short = distribution::delta(&k4, v)?.scale(12);
        assert!(solver::is_reachable(&k4, &short, &cover)?.is_none());
    }
    println!("13 on any one vertex covers; 12 never does");

    // The same 13 pebbles split 9 and 4 across the light edge fail: the
    // split start cannot pay the heavy edges often enough.
    let split = Distribution::new(vec![9, 4, 0, 0]);
    assert!(solver::is_reachable(&k4, &split, &cover)?.is_none());
    println!("13 split as {:?}: does not cover", split.counts());

    // The cover number proper quantifies over every start, so it lands
    // strictly above the single-vertex threshold here.
    let gamma = numbers::cover_number(&k4)?;
    println!("cover number = {}", gamma.value);
    println!(
        "largest failing start {:?}",
        gamma.witness_failure.as_ref().unwrap().counts()
    );
    assert_eq!(gamma.value, Value::Finite(14));
    Ok(())
}
