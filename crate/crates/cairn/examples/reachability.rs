//! Single reachability queries: ask whether a start distribution can be
//! transformed into one containing a target, get the move sequence back,
//! and replay it independently.
//!
//! Run with: cargo run --example reachability

use cairn::distribution::{self, Distribution, DistributionSet};
use cairn::error::Result;
use cairn::families;
use cairn::solver;

fn main() -> Result<()> {
    let p4 = families::path(4)?;

    // Eight pebbles on one end are exactly enough to walk one pebble to
    // the far end: each hop trades two pebbles for one.
    let start = Distribution::new(vec![8, 0, 0, 0]);
    let target = distribution::delta(&p4, 3)?;
    let seq = solver::is_reachable(&p4, &start, &target)?.expect("8 pebbles suffice");
    println!("start {:?}", seq.start.counts());
    for m in &seq.moves {
        println!(
            "  move {} -> {} (costs {})",
            p4.vertex_name(m.from),
            p4.vertex_name(m.to),
            m.cost
        );
    }
    let end = seq.replay(&p4)?;
    println!("end   {:?} contains {:?}", end.counts(), target.counts());
    assert!(end.contains(&target)?);

    // Seven are not: no sequence exists, not merely none found.
    let short = Distribution::new(vec![7, 0, 0, 0]);
    assert!(solver::is_reachable(&p4, &short, &target)?.is_none());
    println!("7 pebbles on the same end: unreachable");

    // Set targets under "any member will do": the solver reports which
    // member it hit. Four pebbles mid-path can double to either endpoint.
    let ends = DistributionSet::new(vec![
        distribution::delta(&p4, 0)?.scale(2),
        distribution::delta(&p4, 3)?.scale(2),
    ])?;
    let mid = Distribution::new(vec![0, 8, 0, 0]);
    let hit = solver::reach_any(&p4, &mid, &ends)?.expect("either end works");
    println!(
        "from {:?}, reached member {} = {:?}",
        mid.counts(),
        hit.member_index,
        hit.target.counts()
    );
    Ok(())
}
