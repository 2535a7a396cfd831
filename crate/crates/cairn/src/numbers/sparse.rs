//! Failing-set layer sweep. Tracks only the states that cannot reach their
//! targets. With every edge weight >= 2 a move strictly shrinks the state,
//! so a failing state of size k either has no legal move or every move
//! leads to a failing state in a strictly smaller layer. Candidates for
//! layer k are therefore the move-less states of that size plus the
//! reverse moves applied to the shallower failing layers; each candidate
//! is then verified exactly against its children, with a delivery-cost
//! prefilter confirming most failures without map lookups. The answer is
//! the first layer with no failing state.
//!
//! States are packed into u128 keys, a fixed bit field per vertex sized by
//! the certified upper bound, so reverse and forward moves are plain
//! integer adds on the key.

use rustc_hash::{FxHashMap, FxHashSet};

use crate::distribution::{Distribution, DistributionSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::PotentialGate;

use super::indexer::Indexer;
use super::{EngineOutcome, Semantics};

/// Cap on tracked states per layer; past this the instance is declared out
/// of reach rather than thrashing the allocator.
const ENTRY_LIMIT: usize = 60_000_000;

pub(crate) fn run(
    g: &Graph,
    members: &[Distribution],
    semantics: Semantics,
    bound: u64,
    budget: Option<u64>,
    examined: &mut u64,
) -> Result<EngineOutcome> {
    let n = g.n();
    if g.has_unit_edges() {
        return Err(Error::Unsupported(
            "failing-set sweep needs every edge weight >= 2".into(),
        ));
    }
    let width = match semantics {
        Semantics::All => members.len(),
        Semantics::Any => 1,
    };
    assert!((1..=16).contains(&width), "mask width out of range");
    let full: u16 = if width == 16 { u16::MAX } else { (1u16 << width) - 1 };

    // Counts never exceed the layer size, which stays within the bound.
    let bits = (64 - bound.leading_zeros()) as usize;
    if bits * n > 128 {
        return Err(Error::Unsupported(format!(
            "cannot pack {n} counts of {bits} bits into one 128-bit key"
        )));
    }
    let field: u128 = (1u128 << bits) - 1;

    let ix = Indexer::new(n, bound + 1);
    let set = DistributionSet::new(members.to_vec())?;
    let gate = PotentialGate::new(g, &set, true);

    let mut moves: Vec<(usize, usize, u64)> = Vec::new();
    for u in 0..n {
        for &(v, w) in g.neighbors(u) {
            moves.push((u, v, w));
        }
    }
    // A vertex below its cheapest incident weight cannot fire; vertices
    // with no edges never can.
    let caps: Vec<Option<u64>> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&(_, w)| w).min().map(|w| w - 1))
        .collect();

    let depth = g.max_edge_weight().max(2) as usize;
    let mut layers: Vec<FxHashMap<u128, u16>> = vec![FxHashMap::default(); depth];
    let mut done_bits: u16 = 0;
    let mut scratch = vec![0u64; n];

    for k in 0..=bound {
        let mut candidates: FxHashSet<u128> = FxHashSet::default();
        no_move_states(&caps, k, bits, &mut candidates)?;
        for &(u, v, w) in &moves {
            let Some(child_k) = (k + 1).checked_sub(w) else {
                continue;
            };
            let su = u * bits;
            let sv = v * bits;
            for &key in layers[child_k as usize % depth].keys() {
                if (key >> sv) & field >= 1 {
                    candidates.insert(key + ((w as u128) << su) - (1u128 << sv));
                    if candidates.len() > ENTRY_LIMIT {
                        return Err(Error::Unsupported(
                            "failing-set candidates exceed the memory budget".into(),
                        ));
                    }
                }
            }
        }

        if let Some(b) = budget {
            if candidates.len() as u64 > b - *examined {
                return Err(Error::BudgetExceeded { examined: *examined });
            }
        }
        *examined += candidates.len() as u64;

        let mut cur: FxHashMap<u128, u16> = FxHashMap::default();
        for &key in &candidates {
            unpack(key, bits, field, &mut scratch);
            debug_assert_eq!(scratch.iter().sum::<u64>(), k);
            let mut confirmed: u16 = 0;
            let mut uncertain: u16 = 0;
            match semantics {
                Semantics::All => {
                    for (j, member) in members.iter().enumerate() {
                        if member.size() <= k && ge(&scratch, member) {
                            continue;
                        }
                        if gate.feasible(&scratch, j) {
                            uncertain |= 1 << j;
                        } else {
                            confirmed |= 1 << j;
                        }
                    }
                }
                Semantics::Any => {
                    if !members.iter().any(|m| m.size() <= k && ge(&scratch, m)) {
                        if gate.feasible_any(&scratch) {
                            uncertain = 1;
                        } else {
                            confirmed = 1;
                        }
                    }
                }
            }
            let mut fail = confirmed;
            if uncertain != 0 {
                let mut acc = uncertain;
                for &(u, v, w) in &moves {
                    if (key >> (u * bits)) & field < w as u128 {
                        continue;
                    }
                    let child = key - ((w as u128) << (u * bits)) + (1u128 << (v * bits));
                    let child_fail = layers[(k + 1 - w) as usize % depth]
                        .get(&child)
                        .copied()
                        .unwrap_or(0);
                    acc &= child_fail;
                    if acc == 0 {
                        break;
                    }
                }
                fail |= acc;
            }
            if fail != 0 {
                cur.insert(key, fail);
                if cur.len() > ENTRY_LIMIT {
                    return Err(Error::Unsupported(
                        "failing-state set exceeds the memory budget".into(),
                    ));
                }
            }
        }

        let mut present: u16 = 0;
        for &m in cur.values() {
            present |= m;
        }
        if done_bits & present != 0 {
            return Err(Error::Inconsistent(
                "a target complete at some size regressed at a larger one".into(),
            ));
        }
        done_bits |= full & !present;
        if present == 0 {
            let (witness_rank, witness) = if k == 0 {
                (u128::MAX, None)
            } else {
                let prev = &layers[(k - 1) as usize % depth];
                let (r, d) = min_rank_state(prev, bits, field, n, k - 1, &ix);
                (r, Some(d))
            };
            return Ok(EngineOutcome {
                value: k,
                witness,
                witness_rank,
            });
        }
        layers[k as usize % depth] = cur;
    }
    Err(Error::BoundExceeded { bound })
}

fn ge(state: &[u64], member: &Distribution) -> bool {
    member.counts().iter().zip(state).all(|(need, have)| have >= need)
}

fn unpack(key: u128, bits: usize, field: u128, out: &mut [u64]) {
    for (v, c) in out.iter_mut().enumerate() {
        *c = ((key >> (v * bits)) & field) as u64;
    }
}

/// All states of size `k` in which no vertex can afford any incident edge.
fn no_move_states(
    caps: &[Option<u64>],
    k: u64,
    bits: usize,
    out: &mut FxHashSet<u128>,
) -> Result<()> {
    // suffix[i] = most pebbles positions i.. can absorb; None is unbounded.
    let n = caps.len();
    let mut suffix: Vec<Option<u64>> = vec![Some(0); n + 1];
    for i in (0..n).rev() {
        suffix[i] = match (caps[i], suffix[i + 1]) {
            (Some(c), Some(s)) => c.checked_add(s),
            _ => None,
        };
    }
    let mut stack: Vec<(usize, u64, u128)> = vec![(0, k, 0)];
    while let Some((i, remaining, key)) = stack.pop() {
        if i == caps.len() {
            if remaining == 0 {
                out.insert(key);
                if out.len() > ENTRY_LIMIT {
                    return Err(Error::Unsupported(
                        "move-less state enumeration exceeds the memory budget".into(),
                    ));
                }
            }
            continue;
        }
        if suffix[i].is_some_and(|s| s < remaining) {
            continue;
        }
        let hi = caps[i].map_or(remaining, |c| c.min(remaining));
        for c in 0..=hi {
            stack.push((i + 1, remaining - c, key | ((c as u128) << (i * bits))));
        }
    }
    Ok(())
}

/// Entry of `layer` earliest in enumeration order, as (rank, state).
fn min_rank_state(
    layer: &FxHashMap<u128, u16>,
    bits: usize,
    field: u128,
    n: usize,
    k: u64,
    ix: &Indexer,
) -> (u128, Distribution) {
    let mut best: Option<(u128, u128)> = None;
    let mut scratch = vec![0u64; n];
    for &key in layer.keys() {
        unpack(key, bits, field, &mut scratch);
        let r = ix.rank(&scratch, k);
        if best.is_none_or(|(br, _)| r < br) {
            best = Some((r, key));
        }
    }
    let (r, key) = best.expect("stopped one layer past a nonempty one");
    unpack(key, bits, field, &mut scratch);
    (r, Distribution::new(scratch))
}
