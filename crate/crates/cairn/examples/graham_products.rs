//! Product inequalities: does the pebbling number of a Cartesian product
//! stay below the product of the factor numbers? Checked exactly on
//! small instances through the conjecture harness.
//!
//! Run with: cargo run --example graham_products

use cairn::error::Result;
use cairn::families;
use cairn::harness::{self, CheckOptions, ConjectureKind, ConjectureSpec, Outcome};

fn main() -> Result<()> {
    // The product form on whole graphs: pi(G x H) <= pi(G) pi(H).
    // Equality on P_2 x P_3 (the 2x3 grid is as hard as its factors
    // multiplied), strict on C_5 x P_2.
    for (g, h) in [
        (families::path(2)?, families::path(2)?),
        (families::path(2)?, families::path(3)?),
        (families::cycle(3)?, families::path(3)?),
        (families::cycle(5)?, families::path(2)?),
    ] {
        let spec = ConjectureSpec::new(ConjectureKind::Graham, g, h);
        let inst = harness::check_conjecture(&spec, CheckOptions::default())?;
        println!(
            "pi(product) = {} vs {} -> {:?}",
            inst.lhs.unwrap(),
            inst.rhs.unwrap(),
            inst.outcome
        );
        assert_eq!(inst.outcome, Outcome::Holds);
    }

    // The vertex form pins both targets: pi(G x H, (x,y)) <= pi(G,x) pi(H,y).
    // Swept over every corner of the 2x3 grid.
    let g = families::path(2)?;
    let h = families::path(3)?;
    for x in 0..g.n() {
        for y in 0..h.n() {
            let mut spec =
                ConjectureSpec::new(ConjectureKind::Vertices, g.clone(), h.clone());
            spec.x = Some(x);
            spec.y = Some(y);
            let inst = harness::check_conjecture(&spec, CheckOptions::default())?;
            println!(
                "target ({x},{y}): {} <= {}",
                inst.lhs.unwrap(),
                inst.rhs.unwrap()
            );
            assert_eq!(inst.holds, Some(true));
        }
    }

    // A sweep bundles instances, counts outcomes, and keeps a fixed
    // order; the report seed makes sampled target picks reproducible.
    let sweep = harness::SweepSpec::new(
        vec![
            (families::path(2)?, families::path(2)?),
            (families::path(3)?, families::path(2)?),
            (families::cycle(4)?, families::path(2)?),
        ],
        vec![ConjectureKind::Graham, ConjectureKind::Distributions],
    );
    let report = harness::sweep(&sweep, CheckOptions::default())?;
    println!(
        "sweep (seed {}): {} hold, {} violations, {} too large",
        report.seed, report.holds, report.violations, report.too_large
    );
    assert_eq!(report.violations, 0);
    Ok(())
}
