//! Selectable targets: instead of reaching every member of a target set,
//! the start only has to reach one member of its own choosing. That
//! relaxation changes the numbers, and it breaks the product inequality
//! that holds for the universal form on these instances.
//!
//! Run with: cargo run --example target_selectable

use cairn::distribution::{self, DistributionSet};
use cairn::error::Result;
use cairn::families;
use cairn::harness::{self, CheckOptions, Classification, Outcome};
use cairn::numbers::{self, Value};

fn main() -> Result<()> {
    // With the family of all single-vertex targets, one pebble anywhere
    // already sits on some member: the selectable number is 1 for every
    // connected graph. Doubled targets need n+1 pebbles instead.
    for g in [families::path(4)?, families::cycle(5)?, families::complete(4)?] {
        let one = numbers::rho_t(&g, 1)?;
        let two = numbers::rho_t(&g, 2)?;
        println!(
            "{} vertices: selectable single = {}, doubled = {}",
            g.n(),
            one.value,
            two.value
        );
        assert_eq!(one.value, Value::Finite(1));
        assert_eq!(two.value, Value::Finite(g.n() as u64 + 1));
    }

    // The doubled form on a product: every start of size mn+1 has a
    // heavy vertex, but the factor bound would promise n+1. The product
    // inequality fails, and the harness reconfirms the violation with
    // the pruning-free scanner before reporting it.
    let p2 = families::path(2)?;
    let p3 = families::path(3)?;
    let inst = harness::check_rho_analog(
        &p2,
        &p3,
        &distribution::s_t(&p2, 2)?,
        &distribution::s_t(&p3, 1)?,
        CheckOptions::default(),
    )?;
    println!(
        "product doubled-targets: {} > {} ({:?}, {:?})",
        inst.lhs.unwrap(),
        inst.rhs.unwrap(),
        inst.outcome,
        inst.classification.unwrap()
    );
    assert_eq!(inst.outcome, Outcome::Violation);
    assert_eq!(inst.classification, Some(Classification::Expected));

    // A second violating family: doubled endpoint targets on the
    // six-path against a single-vertex factor. The endpoint family on
    // the path mirrors a cycle number, which is what makes the exact
    // values land at 11 and 10.
    let trivial = families::trivial();
    let p6 = families::path(6)?;
    let doubled = DistributionSet::singleton(distribution::delta(&trivial, 0)?.scale(2));
    let ends = distribution::d_t(&p6, 1)?;
    let inst = harness::check_rho_analog(&trivial, &p6, &doubled, &ends, CheckOptions::default())?;
    println!(
        "path endpoint family: {} > {}  note: {}",
        inst.lhs.unwrap(),
        inst.rhs.unwrap(),
        inst.note.as_deref().unwrap_or("-")
    );
    assert_eq!(inst.lhs, Some(Value::Finite(11)));
    assert_eq!(inst.rhs, Some(Value::Finite(10)));
    Ok(())
}
