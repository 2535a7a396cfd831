//! Fold-factor identities: doubling a vertex target on a product is
//! bounded through either factor, and repeatedly doubled endpoint
//! targets on a path reproduce cycle numbers exactly.
//!
//! Run with: cargo run --example fold_identities

use cairn::constructions;
use cairn::error::Result;
use cairn::families;

fn main() -> Result<()> {
    // A doubled corner target on the 2x2 grid: the product number is
    // bounded by pushing the doubling into either factor, and both
    // bounds are tight here.
    let p2 = families::path(2)?;
    let report = constructions::verify_doubling_instance(&p2, &p2, 1, 1, 1, 1)?;
    println!(
        "doubled corner: {} <= {} (first factor), {} (second factor)",
        report.lhs, report.rhs.via_first_factor, report.rhs.via_second_factor
    );
    assert!(report.holds);

    // Selectable doubled-endpoint targets on a path match the universal
    // number of a longer cycle, and the closed form for that cycle. The
    // report also carries the critical start: one pebble short, placed
    // to block every member.
    for (n, i) in [(4, 0), (5, 1), (6, 1)] {
        let r = constructions::verify_g_of_p(n, i)?;
        println!(
            "path {n}, {i} doublings: path value {} = cycle({}) value {} = closed form {}; \
             critical start of size {} blocked = {}",
            r.lhs.unwrap(),
            r.cycle_len,
            r.rhs.unwrap(),
            r.closed_form.unwrap(),
            r.critical_size.unwrap(),
            r.critical_blocked.unwrap()
        );
        assert!(r.holds);
    }

    // Corners whose matching cycle would need fewer than three vertices
    // are excluded and reported as such, not guessed at.
    let corner = constructions::verify_g_of_p(2, 0)?;
    println!(
        "path 2, 0 doublings: cycle length {} -> excluded = {}",
        corner.cycle_len, corner.excluded
    );
    assert!(corner.excluded && corner.holds);
    Ok(())
}
