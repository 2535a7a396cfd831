//! Pendant-vertex augmentation: hanging a weighted leaf off a graph
//! trades a fold factor in the target for a hop in the graph. The
//! equality checker computes both sides; the projection maps carry
//! distributions and whole move sequences from the augmented product
//! back down to the base product.
//!
//! Run with: cargo run --example augmentation

use cairn::constructions::{self, AugmentedGraph};
use cairn::distribution::Distribution;
use cairn::error::Result;
use cairn::families;
use cairn::solver;

fn main() -> Result<()> {
    // Doubled target on a path end vs single target one pendant hop
    // further: the two numbers agree exactly.
    let p3 = families::path(3)?;
    let report = constructions::verify_prop_2s(&p3, 2, 2, 1)?;
    println!(
        "doubled at the end of a 3-path = {}  single at the tip of its 4-path = {}",
        report.lhs, report.rhs
    );
    assert!(report.holds);
    println!(
        "failing starts: lhs {:?}, rhs {:?}",
        report.witnesses.lhs.as_ref().unwrap().counts(),
        report.witnesses.rhs.as_ref().unwrap().counts()
    );

    // The same equality with a heavier pendant edge folds by that weight.
    let triangle = families::complete(3)?;
    for v in 0..triangle.n() {
        let heavy = constructions::verify_prop_2s(&triangle, v, 3, 1)?;
        println!(
            "triangle vertex {v}, pendant weight 3: {} = {}",
            heavy.lhs, heavy.rhs
        );
        assert!(heavy.holds);
    }

    // Distribution projection folds the pendant row into its attachment
    // row at the edge weight.
    let aug: AugmentedGraph = constructions::augment(&p3, 2, 2)?;
    let h = families::path(2)?;
    let on_pendant = Distribution::new(vec![0, 0, 0, 0, 0, 0, 1, 0]);
    let folded = constructions::project_distribution(&aug, &h, &on_pendant)?;
    println!("pendant pebble projects to {:?}", folded.counts());
    assert_eq!(folded.counts(), &[0, 0, 0, 0, 2, 0]);

    // Move sequences project too: hops inside the pendant row multiply
    // into repeated hops on the attachment row, hops across the pendant
    // edge dissolve. The projected sequence replays on the base product
    // and still contains the projected end state.
    let aug_product = aug.graph().cartesian_product(&h);
    let start = Distribution::new(vec![0, 0, 0, 0, 0, 0, 8, 0]);
    let target = Distribution::new(vec![0, 0, 0, 0, 0, 0, 0, 2]);
    let seq = solver::is_reachable(&aug_product, &start, &target)?.expect("8 pebbles suffice");
    let projected = constructions::project_move_sequence(&aug, &h, &seq)?;
    println!(
        "{} moves upstairs -> {} moves downstairs, start {:?}",
        seq.moves.len(),
        projected.moves.len(),
        projected.start.counts()
    );
    let end = projected.replay(&p3.cartesian_product(&h))?;
    println!("projected end {:?}", end.counts());
    Ok(())
}
