//! Property tests for the structural laws: product arithmetic, path-cost
//! algebra, metric closure transparency, witness validity, monotonicity,
//! and agreement between the solver engines on sampled instances.

mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cairn::distribution::{self, Distribution, DistributionSet};
use cairn::families;
use cairn::graph::{product_index, Graph};
use cairn::numbers::{self, EnginePreference, ScanOptions, SolveOptions, Value};
use cairn::solver;

fn seeded_graph(n: usize, seed: u64, weights: &[u64]) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = families::random_connected(n, &mut rng).unwrap();
    if weights == [2] {
        return base;
    }
    let edges: Vec<(usize, usize, u64)> = base
        .edges()
        .iter()
        .map(|e| (e.u, e.v, weights[rng.random_range(0..weights.len())]))
        .collect();
    Graph::new(n, &edges).unwrap()
}

fn graph_and_two(
    max_n: usize,
    weights: &'static [u64],
    max_start: u64,
    max_target: u64,
) -> impl Strategy<Value = (Graph, Distribution, Distribution)> {
    (1..=max_n, any::<u64>()).prop_flat_map(move |(n, seed)| {
        let g = seeded_graph(n, seed, weights);
        (
            Just(g),
            prop::collection::vec(0..=max_start, n),
            prop::collection::vec(0..=max_target, n),
        )
    })
    .prop_map(|(g, s, t)| (g, Distribution::new(s), Distribution::new(t)))
}

proptest! {
    #[test]
    fn product_counts_and_swap_bijection(
        (gn, gs) in (1..=4usize, any::<u64>()),
        (hn, hs) in (1..=3usize, any::<u64>()),
    ) {
        let g = seeded_graph(gn, gs, &[1, 2, 3]);
        let h = seeded_graph(hn, hs, &[1, 2, 3]);
        let gh = g.cartesian_product(&h);
        prop_assert_eq!(gh.n(), g.n() * h.n());
        prop_assert_eq!(
            gh.edges().len(),
            g.edges().len() * h.n() + h.edges().len() * g.n()
        );
        // The swapped product is the same graph under (x,y) -> (y,x).
        let hg = h.cartesian_product(&g);
        let relabel = |v: usize| {
            let (x, y) = (v / h.n(), v % h.n());
            product_index(y, x, g.n())
        };
        let canon = |edges: HashSet<(usize, usize, u64)>| edges;
        let mapped: HashSet<_> = gh
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (relabel(e.u), relabel(e.v));
                (a.min(b), a.max(b), e.weight)
            })
            .collect();
        let direct: HashSet<_> = hg
            .edges()
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v), e.weight))
            .collect();
        prop_assert_eq!(canon(mapped), canon(direct));
    }

    #[test]
    fn path_costs_satisfy_the_multiplicative_triangle(
        (n, seed) in (1..=5usize, any::<u64>()),
    ) {
        let g = seeded_graph(n, seed, &[1, 2, 3]);
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let (Some(uv), Some(vw)) = (g.min_path_cost(u, v), g.min_path_cost(v, w))
                    else {
                        continue;
                    };
                    let uw = g.min_path_cost(u, w);
                    prop_assert!(uw.is_some());
                    prop_assert!(uw.unwrap() <= uv.saturating_mul(vw));
                }
            }
        }
    }

    #[test]
    fn metric_closure_is_transparent_to_the_solver(
        (g, start, target) in graph_and_two(4, &[1, 2, 3], 3, 2),
    ) {
        let closed = g.metric_closure().unwrap();
        let direct = solver::is_reachable(&g, &start, &target).unwrap().is_some();
        let via = solver::is_reachable(&closed, &start, &target).unwrap().is_some();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn witnesses_start_where_claimed_and_end_containing_the_target(
        (g, start, target) in graph_and_two(5, &[1, 2, 3], 3, 2),
    ) {
        if let Some(seq) = solver::is_reachable(&g, &start, &target).unwrap() {
            prop_assert_eq!(seq.start.counts(), start.counts());
            let end = seq.replay(&g).unwrap();
            prop_assert!(end.contains(&target).unwrap());
        }
    }

    #[test]
    fn solver_agrees_with_the_reference_search_on_samples(
        (g, start, target) in graph_and_two(5, &[1, 2, 3], 4, 2),
    ) {
        let fast = solver::is_reachable(&g, &start, &target).unwrap().is_some();
        let slow = common::reference_reachable(&g, &start, &target);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn extra_pebbles_never_hurt(
        (g, start, target) in graph_and_two(4, &[2], 3, 2),
        extra_at in any::<prop::sample::Index>(),
    ) {
        if solver::is_reachable(&g, &start, &target).unwrap().is_some() {
            let v = extra_at.index(g.n());
            let mut counts = start.counts().to_vec();
            counts[v] += 1;
            let bigger = Distribution::new(counts);
            prop_assert!(solver::is_reachable(&g, &bigger, &target).unwrap().is_some());
        }
    }

    #[test]
    fn the_zero_target_is_reachable_by_doing_nothing(
        (g, start, _t) in graph_and_two(4, &[1, 2, 3], 3, 0),
    ) {
        let zero = Distribution::zero(g.n());
        let seq = solver::is_reachable(&g, &start, &zero).unwrap();
        prop_assert!(seq.is_some());
        prop_assert!(seq.unwrap().is_empty());
    }

    #[test]
    fn number_results_are_internally_coherent(
        (g, _s, target) in graph_and_two(4, &[2], 0, 2),
    ) {
        let r = numbers::pi_dist(&g, &target).unwrap();
        let bound = numbers::certified_upper_bound(
            &g,
            &DistributionSet::singleton(target.clone()),
        ).unwrap();
        match r.value {
            Value::Finite(v) => {
                prop_assert!(Value::Finite(v) <= bound);
                if v > 0 {
                    // The failing witness is one pebble short and really
                    // does fail.
                    let w = r.witness_failure.clone().unwrap();
                    prop_assert_eq!(w.size(), v - 1);
                    prop_assert!(solver::is_reachable(&g, &w, &target).unwrap().is_none());
                }
            }
            Value::Infinite => prop_assert_eq!(bound, Value::Infinite),
        }
    }

    #[test]
    fn both_engines_and_the_scan_agree(
        (g, _s, target) in graph_and_two(4, &[2], 0, 2),
    ) {
        let dense = numbers::pi_dist_opts(
            &g,
            &target,
            SolveOptions { engine: EnginePreference::Dense, ..SolveOptions::default() },
        ).unwrap();
        let sparse = numbers::pi_dist_opts(
            &g,
            &target,
            SolveOptions { engine: EnginePreference::Sparse, ..SolveOptions::default() },
        ).unwrap();
        let scanned = numbers::pi_set_by_search(
            &g,
            &DistributionSet::singleton(target.clone()),
            ScanOptions { budget: None, paranoid: true },
        ).unwrap();
        prop_assert_eq!(dense.value, sparse.value);
        prop_assert_eq!(dense.value, scanned.value);
    }

    #[test]
    fn selectable_values_never_exceed_universal_ones(
        (g, _s, first) in graph_and_two(4, &[2], 0, 2),
        second in prop::collection::vec(0..=2u64, 1..=4),
    ) {
        let mut members = vec![first.clone()];
        if second.len() == g.n() {
            members.push(Distribution::new(second));
        }
        let set = DistributionSet::new(members).unwrap();
        let universal = numbers::pi_set(&g, &set).unwrap().value;
        let selectable = numbers::rho_set(&g, &set).unwrap().value;
        prop_assert!(selectable <= universal);
    }

    #[test]
    fn distribution_product_multiplies_sizes(
        a in prop::collection::vec(0..=3u64, 1..=4),
        b in prop::collection::vec(0..=3u64, 1..=4),
    ) {
        let da = Distribution::new(a);
        let db = Distribution::new(b);
        let prod = da.product(&db);
        prop_assert_eq!(prod.n(), da.n() * db.n());
        prop_assert_eq!(prod.size(), da.size() * db.size());
    }

    #[test]
    fn set_products_contain_exactly_the_pairwise_products(
        a in prop::collection::vec(prop::collection::vec(0..=2u64, 2), 1..=3),
        b in prop::collection::vec(prop::collection::vec(0..=2u64, 3), 1..=3),
    ) {
        let sa = DistributionSet::new(a.into_iter().map(Distribution::new).collect()).unwrap();
        let sb = DistributionSet::new(b.into_iter().map(Distribution::new).collect()).unwrap();
        let prod = sa.set_product(&sb);
        prop_assert!(prod.len() <= sa.len() * sb.len());
        let expect: HashSet<Vec<u64>> = sa
            .members()
            .iter()
            .flat_map(|x| sb.members().iter().map(move |y| x.product(y).counts().to_vec()))
            .collect();
        let got: HashSet<Vec<u64>> =
            prod.members().iter().map(|d| d.counts().to_vec()).collect();
        prop_assert_eq!(got, expect);
    }
}

/// Exhaustive closure-transparency sweep on the smallest graphs, where
/// sampling leaves no gaps.
#[test]
fn metric_closure_is_transparent_exhaustively_on_tiny_graphs() {
    for n in 2..=3 {
        for g in families::all_connected_weighted_graphs(n, &[2, 3]).unwrap() {
            let closed = g.metric_closure().unwrap();
            for start_size in 0..=6 {
                for start in distribution::enumerate_distributions(&g, start_size) {
                    for target_size in 0..=4 {
                        for target in distribution::enumerate_distributions(&g, target_size) {
                            let direct =
                                solver::is_reachable(&g, &start, &target).unwrap().is_some();
                            let via = solver::is_reachable(&closed, &start, &target)
                                .unwrap()
                                .is_some();
                            assert_eq!(
                                direct,
                                via,
                                "closure changed the answer: edges {:?}, start {:?}, target {:?}",
                                g.edges(),
                                start.counts(),
                                target.counts()
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Enumeration order is largest-first lexicographic in counts and
/// complete: the stream has exactly the predicted length, no duplicates,
/// and every entry the requested size.
#[test]
fn enumeration_is_lexicographic_and_complete() {
    for n in 1..=4usize {
        let g = if n == 1 { families::trivial() } else { families::path(n).unwrap() };
        for size in 0..=5u64 {
            let all: Vec<Vec<u64>> = distribution::enumerate_distributions(&g, size)
                .map(|d| d.counts().to_vec())
                .collect();
            let predicted = distribution::count_distributions(n, size).unwrap();
            assert_eq!(all.len() as u128, predicted);
            assert!(all.iter().all(|c| c.iter().sum::<u64>() == size));
            assert!(all.windows(2).all(|w| w[0] > w[1]), "order broke at n={n} size={size}");
        }
    }
}
