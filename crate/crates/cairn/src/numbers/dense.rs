//! Full-lattice layer sweep. For every distribution of each size in
//! ascending order it computes a bitmask saying which targets that state
//! can reach: a state reaches a target iff it contains it or some legal
//! move leads to a state that does. Moves of weight w land w-1 layers
//! down, so masks propagate from already-finished layers; weight-1 edges
//! keep the size and are closed within the layer by a fixpoint sweep.
//! The answer is the first layer whose masks are all complete.

use crate::distribution::{advance_composition, Distribution};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::indexer::Indexer;
use super::{EngineOutcome, Semantics};

pub(crate) enum DenseRun {
    Done(EngineOutcome),
    /// Outgrew the state allowance before finishing; the caller falls back
    /// to the failing-set engine.
    Spill,
}

pub(crate) fn run(
    g: &Graph,
    members: &[Distribution],
    semantics: Semantics,
    bound: u64,
    budget: Option<u64>,
    examined: &mut u64,
    state_allowance: &mut u128,
) -> Result<DenseRun> {
    let n = g.n();
    let width = match semantics {
        Semantics::All => members.len(),
        Semantics::Any => 1,
    };
    assert!((1..=16).contains(&width), "mask width out of range");
    let full: u16 = if width == 16 { u16::MAX } else { (1u16 << width) - 1 };

    let ix = Indexer::new(n, bound + 1);
    let mut moves: Vec<(usize, usize, u64)> = Vec::new();
    for u in 0..n {
        for &(v, w) in g.neighbors(u) {
            moves.push((u, v, w));
        }
    }
    let unit_edges = g.has_unit_edges();
    let depth = g.max_edge_weight().max(2) as usize;
    let mut layers: Vec<Vec<u16>> = vec![Vec::new(); depth];

    // Bits whose target was complete in some earlier layer; completeness is
    // monotone in the size, so a regression means a bug.
    let mut done_bits: u16 = 0;
    let mut state: Vec<u64> = vec![0; n];
    for k in 0..=bound {
        let count = ix.layer_count(k);
        if let Some(b) = budget {
            if count > (b - *examined) as u128 {
                return Err(Error::BudgetExceeded { examined: *examined });
            }
        }
        if count > *state_allowance {
            return Ok(DenseRun::Spill);
        }
        *state_allowance -= count;
        *examined += count as u64;

        let mut masks = vec![0u16; count as usize];
        state.iter_mut().for_each(|c| *c = 0);
        state[0] = k;
        let mut i = 0usize;
        loop {
            let mut mask = base_mask(&state, members, semantics, k);
            if mask != full {
                for &(u, v, w) in &moves {
                    if w == 1 || state[u] < w {
                        continue;
                    }
                    let child_k = k - w + 1;
                    state[u] -= w;
                    state[v] += 1;
                    let r = ix.rank(&state, child_k) as usize;
                    state[v] -= 1;
                    state[u] += w;
                    mask |= layers[child_k as usize % depth][r];
                    if mask == full {
                        break;
                    }
                }
            }
            masks[i] = mask;
            i += 1;
            if !advance_composition(&mut state) {
                break;
            }
        }
        debug_assert_eq!(i as u128, count);

        if unit_edges {
            unit_fixpoint(&mut masks, &mut state, &moves, &ix, k, full);
        }

        let mut and_all = full;
        for &m in &masks {
            and_all &= m;
        }
        if done_bits & !and_all != 0 {
            return Err(Error::Inconsistent(
                "a target complete at some size regressed at a larger one".into(),
            ));
        }
        done_bits |= and_all;
        if and_all == full {
            let (witness_rank, witness) = if k == 0 {
                (u128::MAX, None)
            } else {
                let prev = &layers[(k - 1) as usize % depth];
                let (r, d) = first_incomplete(prev, full, n, k - 1);
                (r, Some(d))
            };
            return Ok(DenseRun::Done(EngineOutcome {
                value: k,
                witness,
                witness_rank,
            }));
        }
        layers[k as usize % depth] = masks;
    }
    Err(Error::BoundExceeded { bound })
}

fn base_mask(state: &[u64], members: &[Distribution], semantics: Semantics, k: u64) -> u16 {
    match semantics {
        Semantics::All => {
            let mut mask = 0u16;
            for (j, member) in members.iter().enumerate() {
                if member.size() <= k && ge(state, member) {
                    mask |= 1 << j;
                }
            }
            mask
        }
        Semantics::Any => u16::from(
            members
                .iter()
                .any(|m| m.size() <= k && ge(state, m)),
        ),
    }
}

fn ge(state: &[u64], member: &Distribution) -> bool {
    member.counts().iter().zip(state).all(|(need, have)| have >= need)
}

/// Closes reach over weight-1 moves inside one layer: sweep until stable.
/// Masks only grow, so this terminates.
fn unit_fixpoint(
    masks: &mut [u16],
    state: &mut [u64],
    moves: &[(usize, usize, u64)],
    ix: &Indexer,
    k: u64,
    full: u16,
) {
    loop {
        let mut changed = false;
        state.iter_mut().for_each(|c| *c = 0);
        state[0] = k;
        let mut i = 0usize;
        loop {
            let mut mask = masks[i];
            if mask != full {
                for &(u, v, w) in moves {
                    if w != 1 || state[u] < 1 {
                        continue;
                    }
                    state[u] -= 1;
                    state[v] += 1;
                    let r = ix.rank(state, k) as usize;
                    state[v] -= 1;
                    state[u] += 1;
                    mask |= masks[r];
                    if mask == full {
                        break;
                    }
                }
                if mask != masks[i] {
                    masks[i] = mask;
                    changed = true;
                }
            }
            i += 1;
            if !advance_composition(state) {
                break;
            }
        }
        if !changed {
            return;
        }
    }
}

/// First state of layer `k` (in enumeration order) whose mask is not full.
fn first_incomplete(masks: &[u16], full: u16, n: usize, k: u64) -> (u128, Distribution) {
    let mut state = vec![0u64; n];
    state[0] = k;
    let mut i = 0usize;
    loop {
        if masks[i] != full {
            return (i as u128, Distribution::new(state));
        }
        i += 1;
        assert!(
            advance_composition(&mut state),
            "stopped at a layer with no incomplete state"
        );
    }
}
