//! Shared reference oracle: a literal depth-first search over raw pebble
//! states with none of the production solver's machinery. No memo reuse,
//! no dominance skipping, no cost-based pruning; termination rests on the
//! visited set alone, which also covers free moves across weight-1 edges.

#![allow(dead_code)]

use std::collections::HashSet;

use cairn::distribution::{self, Distribution, DistributionSet};
use cairn::graph::Graph;

pub fn reference_reachable(g: &Graph, start: &Distribution, target: &Distribution) -> bool {
    let t = target.counts();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut stack = vec![start.counts().to_vec()];
    while let Some(state) = stack.pop() {
        if state.iter().zip(t).all(|(have, need)| have >= need) {
            return true;
        }
        if !seen.insert(state.clone()) {
            continue;
        }
        for e in g.edges() {
            for (from, to) in [(e.u, e.v), (e.v, e.u)] {
                if state[from] >= e.weight {
                    let mut next = state.clone();
                    next[from] -= e.weight;
                    next[to] += 1;
                    if !seen.contains(&next) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    false
}

pub fn reference_reaches_some(
    g: &Graph,
    start: &Distribution,
    targets: &DistributionSet,
) -> bool {
    targets.members().iter().any(|t| reference_reachable(g, start, t))
}

/// First size where every start reaches the target; None once `limit` is
/// passed, so a broken caller cannot loop forever.
pub fn reference_pi_dist(g: &Graph, target: &Distribution, limit: u64) -> Option<u64> {
    (0..=limit).find(|&size| {
        distribution::enumerate_distributions(g, size)
            .all(|start| reference_reachable(g, &start, target))
    })
}

/// First size where every start reaches some member of its choice.
pub fn reference_rho_set(g: &Graph, targets: &DistributionSet, limit: u64) -> Option<u64> {
    (0..=limit).find(|&size| {
        distribution::enumerate_distributions(g, size)
            .all(|start| reference_reaches_some(g, &start, targets))
    })
}
