//! End-to-end checks of the promised capabilities, one test per claim.
//! Every test prints a single pass/fail line so a full run reads as a
//! checklist; failures also carry the first offending instance.

mod common;

use cairn::constructions;
use cairn::distribution::{self, Distribution, DistributionSet};
use cairn::families;
use cairn::graph::Graph;
use cairn::harness::{self, CheckOptions, ConjectureKind, ConjectureSpec, Outcome};
use cairn::numbers::{self, Value};
use cairn::solver;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type CheckResult = std::result::Result<(), Box<dyn std::error::Error>>;

fn criterion(name: &str, body: impl FnOnce() -> CheckResult) {
    match body() {
        Ok(()) => println!("{name}: pass"),
        Err(e) => {
            println!("{name}: FAIL ({e})");
            panic!("{name} failed: {e}");
        }
    }
}

fn ensure(cond: bool, msg: String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

#[test]
fn criterion_01_cycle_values_match_closed_forms() {
    criterion("01 cycle values", || {
        let started = std::time::Instant::now();
        let expected: [(usize, u64); 7] =
            [(3, 3), (4, 4), (5, 5), (6, 8), (7, 11), (8, 16), (9, 21)];
        for (n, want) in expected {
            // Even lengths give a pure power of two; odd lengths round a
            // two-thirds power up or down depending on the residue mod 4.
            let formula = if n % 2 == 0 {
                1u64 << (n / 2)
            } else if n % 4 == 3 {
                let m = (n + 1) / 4;
                ((1u64 << (2 * m + 1)) + 1) / 3
            } else {
                let m = (n - 1) / 4;
                ((1u64 << (2 * m + 2)) - 1) / 3
            };
            ensure(formula == want, format!("formula at n={n}: {formula} != {want}"))?;
            let closed = numbers::cycle_closed_form(n)?;
            ensure(closed == want, format!("closed form at n={n}: {closed} != {want}"))?;
            let r = numbers::pi_graph(&families::cycle(n)?)?;
            ensure(
                r.value == Value::Finite(want),
                format!("computed pi(cycle {n}) = {} wanted {want}", r.value),
            )?;
        }
        ensure(
            started.elapsed().as_secs() < 60,
            "cycle scan exceeded a minute".to_string(),
        )?;
        Ok(())
    });
}

#[test]
fn criterion_02_weighted_k4_cover_counterexample() {
    criterion("02 weighted K4 cover", || {
        let k4 = families::weighted_k4(2, 5);
        let cover = distribution::gamma_target(&k4);
        let threshold = numbers::single_vertex_threshold(&k4, &cover)?;
        ensure(
            threshold == Value::Finite(13),
            format!("single-vertex threshold = {threshold}, wanted 13"),
        )?;
        for v in 0..k4.n() {
            let full = distribution::delta(&k4, v)?.scale(13);
            ensure(
                solver::is_reachable(&k4, &full, &cover)?.is_some(),
                format!("13 pebbles on vertex {v} should cover"),
            )?;
            let short = distribution::delta(&k4, v)?.scale(12);
            ensure(
                solver::is_reachable(&k4, &short, &cover)?.is_none(),
                format!("12 pebbles on vertex {v} should not cover"),
            )?;
        }
        let split = Distribution::new(vec![9, 4, 0, 0]);
        ensure(
            solver::is_reachable(&k4, &split, &cover)?.is_none(),
            "the 9/4 split should fail to cover".to_string(),
        )?;
        Ok(())
    });
}

#[test]
fn criterion_03_positive_targets_collapse_to_single_vertex_threshold() {
    criterion("03 positive-target threshold", || {
        for n in 1..=4usize {
            for g in families::all_connected_graphs(n)? {
                for extra in 0..=(6 - n as u64) {
                    for pad in distribution::enumerate_distributions(&g, extra) {
                        let target =
                            Distribution::new(pad.counts().iter().map(|c| c + 1).collect());
                        let direct = numbers::pi_dist(&g, &target)?.value;
                        let threshold = numbers::single_vertex_threshold(&g, &target)?;
                        ensure(
                            direct == threshold,
                            format!(
                                "edges {:?}, target {:?}: number {direct} vs threshold {threshold}",
                                g.edges(),
                                target.counts()
                            ),
                        )?;
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_set_queries_decompose_over_members() {
    criterion("04 set query laws", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC4);
        for instance in 0..50 {
            let n = rng.random_range(1..=4);
            let g = families::random_connected(n, &mut rng)?;
            let members: Vec<Distribution> = (0..rng.random_range(1..=3usize))
                .map(|_| {
                    let mut counts = vec![0u64; n];
                    for _ in 0..rng.random_range(0..=4) {
                        counts[rng.random_range(0..n)] += 1;
                    }
                    Distribution::new(counts)
                })
                .collect();
            let set = DistributionSet::new(members)?;
            let whole = numbers::pi_set(&g, &set)?.value;
            let mut best = Value::Finite(0);
            for member in set.members() {
                let one = numbers::pi_dist(&g, member)?.value;
                if one > best {
                    best = one;
                }
            }
            ensure(
                whole == best,
                format!("instance {instance}: set value {whole} vs member max {best}"),
            )?;
            if set.members().len() > 1 {
                for skip in 0..set.members().len() {
                    let subset: Vec<Distribution> = set
                        .members()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, d)| d.clone())
                        .collect();
                    let sub = numbers::pi_set(&g, &DistributionSet::new(subset)?)?.value;
                    ensure(
                        sub <= whole,
                        format!("instance {instance}: subset value {sub} above {whole}"),
                    )?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_pendant_equalities() {
    criterion("05 pendant equalities", || {
        for n in 1..=4usize {
            for g in families::all_connected_graphs(n)? {
                for x in 0..g.n() {
                    for fold in [1, 2] {
                        let r = constructions::verify_prop_2s(&g, x, 2, fold)?;
                        ensure(
                            r.holds,
                            format!(
                                "plain pendant: edges {:?}, x={x}, fold={fold}: {} vs {}",
                                g.edges(),
                                r.lhs,
                                r.rhs
                            ),
                        )?;
                    }
                }
            }
        }
        for n in 2..=3usize {
            for g in families::all_connected_weighted_graphs(n, &[2, 3])? {
                for x in 0..g.n() {
                    for s in [1, 2] {
                        for t in [1, 2] {
                            let r = constructions::verify_prop_2s(&g, x, s, t)?;
                            ensure(
                                r.holds,
                                format!(
                                    "weighted pendant: edges {:?}, x={x}, s={s}, t={t}: {} vs {}",
                                    g.edges(),
                                    r.lhs,
                                    r.rhs
                                ),
                            )?;
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_path_cycle_correspondence() {
    criterion("06 path-cycle correspondence", || {
        let mut corners: Vec<(usize, u32)> = Vec::new();
        corners.extend((2..=6).map(|n| (n, 0)));
        corners.extend((2..=6).map(|n| (n, 1)));
        corners.push((2, 2));
        corners.push((3, 2));
        for (n, i) in corners {
            let r = constructions::verify_g_of_p(n, i)?;
            ensure(r.holds, format!("correspondence failed at n={n}, i={i}"))?;
            if n + 2 * i as usize >= 4 {
                ensure(!r.excluded, format!("n={n}, i={i} wrongly excluded"))?;
                ensure(
                    r.critical_blocked == Some(true),
                    format!("critical start not blocked at n={n}, i={i}"),
                )?;
            } else {
                ensure(r.excluded, format!("n={n}, i={i} should be the excluded corner"))?;
            }
        }
        let largest = constructions::verify_g_of_p(6, 1)?;
        ensure(
            largest.lhs == Some(Value::Finite(11)),
            format!("six-path doubled-endpoint value = {:?}, wanted 11", largest.lhs),
        )?;
        Ok(())
    });
}

#[test]
fn criterion_07_selectable_single_and_doubled_targets() {
    criterion("07 selectable target sizes", || {
        let mut graphs = vec![families::trivial(), families::hypercube(2)?];
        for n in 2..=5 {
            graphs.push(families::path(n)?);
            graphs.push(families::complete(n)?);
        }
        for n in 3..=5 {
            graphs.push(families::cycle(n)?);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
        for _ in 0..20 {
            let n = rng.random_range(2..=5);
            graphs.push(families::random_connected(n, &mut rng)?);
        }
        for g in &graphs {
            let single = numbers::rho_t(g, 1)?.value;
            ensure(
                single == Value::Finite(1),
                format!("edges {:?}: selectable single-target value {single}", g.edges()),
            )?;
            let doubled = numbers::rho_t(g, 2)?.value;
            let want = g.n() as u64 + 1;
            ensure(
                doubled == Value::Finite(want),
                format!("edges {:?}: doubled value {doubled}, wanted {want}", g.edges()),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_08_selectable_product_violations() {
    criterion("08 selectable product violations", || {
        let p2 = families::path(2)?;
        let p3 = families::path(3)?;
        let grid = harness::check_rho_analog(
            &p2,
            &p3,
            &distribution::s_t(&p2, 2)?,
            &distribution::s_t(&p3, 1)?,
            CheckOptions::default(),
        )?;
        ensure(
            grid.outcome == Outcome::Violation
                && grid.lhs == Some(Value::Finite(7))
                && grid.rhs == Some(Value::Finite(3)),
            format!("grid instance: {:?} {:?} {:?}", grid.outcome, grid.lhs, grid.rhs),
        )?;
        ensure(
            grid.paranoid_confirmed == Some(true),
            "grid violation missing its pruning-free reconfirmation".to_string(),
        )?;
        let trivial = families::trivial();
        let p6 = families::path(6)?;
        let doubled = DistributionSet::singleton(distribution::delta(&trivial, 0)?.scale(2));
        let family = harness::check_rho_analog(
            &trivial,
            &p6,
            &doubled,
            &distribution::d_t(&p6, 1)?,
            CheckOptions::default(),
        )?;
        ensure(
            family.outcome == Outcome::Violation
                && family.lhs == Some(Value::Finite(11))
                && family.rhs == Some(Value::Finite(10)),
            format!("path family: {:?} {:?} {:?}", family.outcome, family.lhs, family.rhs),
        )?;
        ensure(
            family.paranoid_confirmed == Some(true),
            "path-family violation missing its pruning-free reconfirmation".to_string(),
        )?;
        Ok(())
    });
}

#[test]
fn criterion_09_product_inequalities_hold_at_desk_scale() {
    criterion("09 product inequalities", || {
        let p2 = families::path(2)?;
        let p3 = families::path(3)?;
        let lefts = [
            p2.clone(),
            p3.clone(),
            families::path(4)?,
            families::cycle(3)?,
            families::cycle(4)?,
            families::cycle(5)?,
        ];
        for g in &lefts {
            for h in [&p2, &p3] {
                let spec = ConjectureSpec::new(ConjectureKind::Graham, g.clone(), h.clone());
                let inst = harness::check_conjecture(&spec, CheckOptions::default())?;
                ensure(
                    inst.outcome == Outcome::Holds,
                    format!(
                        "whole-graph instance {:?} x {:?}: {:?} ({:?} vs {:?})",
                        g.edges(),
                        h.edges(),
                        inst.outcome,
                        inst.lhs,
                        inst.rhs
                    ),
                )?;
            }
        }
        let grid = harness::check_conjecture(
            &ConjectureSpec::new(ConjectureKind::Graham, p2.clone(), p3.clone()),
            CheckOptions::default(),
        )?;
        ensure(
            grid.lhs == Some(Value::Finite(8)) && grid.rhs == Some(Value::Finite(8)),
            format!("2x3 grid: {:?} vs {:?}, wanted 8 = 2*4", grid.lhs, grid.rhs),
        )?;
        for (g, h) in [(p2.clone(), p3.clone()), (p2.clone(), p2.clone())] {
            for x in 0..g.n() {
                for y in 0..h.n() {
                    let mut spec =
                        ConjectureSpec::new(ConjectureKind::Vertices, g.clone(), h.clone());
                    spec.x = Some(x);
                    spec.y = Some(y);
                    let inst = harness::check_conjecture(&spec, CheckOptions::default())?;
                    ensure(
                        inst.outcome == Outcome::Holds,
                        format!("vertex instance ({x},{y}): {:?}", inst.outcome),
                    )?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_solver_matches_reference_search() {
    criterion("10 solver vs reference search", || {
        let mut graphs = Vec::new();
        for n in 1..=4 {
            graphs.extend(families::all_connected_graphs(n)?);
        }
        for n in 2..=3 {
            graphs.extend(families::all_connected_weighted_graphs(n, &[1, 2, 3])?);
        }
        // Four-vertex weighted coverage: every {1,2,3} weighting of the
        // path, the star, and the four-cycle.
        let shapes: [&[(usize, usize)]; 3] = [
            &[(0, 1), (1, 2), (2, 3)],
            &[(0, 1), (0, 2), (0, 3)],
            &[(0, 1), (1, 2), (2, 3), (0, 3)],
        ];
        for shape in shapes {
            for code in 0..3u32.pow(shape.len() as u32) {
                let mut c = code;
                let edges: Vec<(usize, usize, u64)> = shape
                    .iter()
                    .map(|&(u, v)| {
                        let w = [1u64, 2, 3][(c % 3) as usize];
                        c /= 3;
                        (u, v, w)
                    })
                    .collect();
                graphs.push(Graph::new(4, &edges)?);
            }
        }
        let mut compared = 0u64;
        for g in &graphs {
            let targets: Vec<Distribution> = (0..g.n())
                .map(|v| distribution::delta(g, v))
                .collect::<cairn::Result<_>>()?;
            for size in 0..=8 {
                for start in distribution::enumerate_distributions(g, size) {
                    for target in &targets {
                        let fast = solver::is_reachable(g, &start, target)?.is_some();
                        let slow = common::reference_reachable(g, &start, target);
                        ensure(
                            fast == slow,
                            format!(
                                "disagreement: edges {:?}, start {:?}, target {:?}: solver {fast}, reference {slow}",
                                g.edges(),
                                start.counts(),
                                target.counts()
                            ),
                        )?;
                        compared += 1;
                    }
                }
            }
        }
        ensure(compared > 300_000, format!("only {compared} instances compared"))?;
        Ok(())
    });
}

#[test]
fn criterion_11_three_cube_value() {
    criterion("11 three-cube value", || {
        let started = std::time::Instant::now();
        let r = numbers::pi_graph(&families::hypercube(3)?)?;
        ensure(
            r.value == Value::Finite(8),
            format!("three-cube value = {}, wanted 8", r.value),
        )?;
        ensure(
            started.elapsed().as_secs() < 60,
            "three-cube computation exceeded a minute".to_string(),
        )?;
        Ok(())
    });
}
