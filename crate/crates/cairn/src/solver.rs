//! Exact reachability: can a start distribution be pebbled to a state
//! containing the target (or some member of a target set)?
//!
//! The search walks the reachable-state space depth-first with a visited
//! set. Moves cost `w(e)` pebbles, so with all weights >= 2 every move
//! shrinks the state and plain memoization terminates; weight-1 edges make
//! equal-size plateaus and the visited set handles the cycles they create.
//! Two prunes sit on top, both switched off in paranoid mode:
//!
//! * dominance: a state under an already-exhausted failed state fails too
//!   (bigger starts reach more, so smaller ones reach less);
//! * potential: pebbles discounted by cheapest delivery cost give an upper
//!   bound on what can ever arrive at a target vertex; states that cannot
//!   pay are dropped.
//!
//! Witnesses are deterministic: moves are explored in (source, target)
//! lexicographic order and the first success is returned.

use crate::distribution::{Distribution, DistributionSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use std::collections::HashSet;

/// One pebbling move: remove `cost` pebbles from `from`, add one to `to`.
/// `cost` is always the weight of the edge `{from, to}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub from: VertexId,
    pub to: VertexId,
    pub cost: u64,
}

/// A replayable witness: the start plus the moves in firing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSequence {
    pub start: Distribution,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn empty(start: Distribution) -> MoveSequence {
        MoveSequence { start, moves: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays every move through `apply_move`, failing if any move is
    /// illegal at the moment it fires. Returns the end state.
    pub fn replay(&self, g: &Graph) -> Result<Distribution> {
        let mut cur = self.start.clone();
        for m in &self.moves {
            cur = apply_move(g, &cur, *m)?;
        }
        Ok(cur)
    }
}

/// Applies a single move, checking it against the graph: the edge must
/// exist, `cost` must equal its weight, and the source must hold at least
/// `cost` pebbles.
pub fn apply_move(g: &Graph, d: &Distribution, m: Move) -> Result<Distribution> {
    if d.n() != g.n() {
        return Err(Error::InvalidDistribution(format!(
            "distribution over {} vertices on a graph with {}",
            d.n(),
            g.n()
        )));
    }
    let Some(&(_, w)) = g.neighbors(m.from).iter().find(|&&(v, _)| v == m.to) else {
        return Err(Error::InvalidInput(format!(
            "no edge between {} and {}",
            m.from, m.to
        )));
    };
    if w != m.cost {
        return Err(Error::InvalidInput(format!(
            "move cost {} but edge weight is {w}",
            m.cost
        )));
    }
    if d.count(m.from) < w {
        return Err(Error::InvalidInput(format!(
            "move needs {w} pebbles on {} but only {} present",
            m.from,
            d.count(m.from)
        )));
    }
    let mut counts = d.counts().to_vec();
    counts[m.from] -= w;
    counts[m.to] += 1;
    Ok(Distribution::new(counts))
}

/// Solver switches. `paranoid` turns off dominance and potential pruning,
/// leaving only the visited set; it exists so any surprising verdict can be
/// recomputed with the bare search.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOpts {
    pub paranoid: bool,
}

/// A successful `reach_any` outcome: which member was reached and how.
#[derive(Clone, Debug)]
pub struct AnyReach {
    pub member_index: usize,
    pub target: Distribution,
    pub sequence: MoveSequence,
}

/// Decides whether `target` is reachable from `start`; on success returns
/// a deterministic move-sequence witness (empty when `start` already
/// contains `target`).
pub fn is_reachable(
    g: &Graph,
    start: &Distribution,
    target: &Distribution,
) -> Result<Option<MoveSequence>> {
    is_reachable_opts(g, start, target, SolveOpts::default())
}

pub fn is_reachable_opts(
    g: &Graph,
    start: &Distribution,
    target: &Distribution,
    opts: SolveOpts,
) -> Result<Option<MoveSequence>> {
    let set = DistributionSet::singleton(target.clone());
    Ok(search(g, start, &set, opts)?.map(|hit| hit.sequence))
}

/// Decides whether at least one member of `targets` is reachable from
/// `start`; the member may be chosen after seeing the start, which is the
/// target-selectable semantics.
pub fn reach_any(
    g: &Graph,
    start: &Distribution,
    targets: &DistributionSet,
) -> Result<Option<AnyReach>> {
    search(g, start, targets, SolveOpts::default())
}

pub fn reach_any_opts(
    g: &Graph,
    start: &Distribution,
    targets: &DistributionSet,
    opts: SolveOpts,
) -> Result<Option<AnyReach>> {
    search(g, start, targets, opts)
}

/// Per-member delivery-cost bound. For a target vertex t, a pebble at v is
/// worth at most 1/cost(v,t) of a pebble delivered to t (moving along an
/// edge never increases the discounted sum), so a state with discounted sum
/// below the demand at t can never serve it. Scaled to integers by the lcm
/// of the finite costs; rows that overflow are disabled (no pruning).
pub(crate) struct PotentialGate {
    // member -> rows of (per-vertex scaled worth, scaled demand)
    members: Vec<Vec<(Vec<u128>, u128)>>,
    enabled: bool,
}

impl PotentialGate {
    pub(crate) fn new(g: &Graph, targets: &DistributionSet, enabled: bool) -> PotentialGate {
        if !enabled {
            return PotentialGate { members: Vec::new(), enabled: false };
        }
        let cost = g.all_pairs_cost();
        let mut members = Vec::with_capacity(targets.len());
        for member in targets.members() {
            let mut rows = Vec::new();
            for t in 0..g.n() {
                let demand = member.count(t);
                if demand == 0 {
                    continue;
                }
                let finite: Vec<u128> = (0..g.n())
                    .filter_map(|v| cost[v][t].map(|c| c as u128))
                    .collect();
                let mut l: u128 = 1;
                let mut ok = true;
                for c in &finite {
                    match lcm_checked(l, *c) {
                        Some(nl) => l = nl,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                let scaled_demand = if ok {
                    (demand as u128).checked_mul(l)
                } else {
                    None
                };
                let Some(scaled_demand) = scaled_demand else {
                    // Overflow: skip this row, which only weakens pruning.
                    continue;
                };
                let worth: Vec<u128> = (0..g.n())
                    .map(|v| cost[v][t].map_or(0, |c| l / c as u128))
                    .collect();
                rows.push((worth, scaled_demand));
            }
            members.push(rows);
        }
        PotentialGate { members, enabled: true }
    }

    /// Can `state` still possibly pay for member `m`?
    pub(crate) fn feasible(&self, state: &[u64], m: usize) -> bool {
        if !self.enabled {
            return true;
        }
        'rows: for (worth, demand) in &self.members[m] {
            let mut total: u128 = 0;
            for (v, &c) in state.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let Some(part) = (c as u128).checked_mul(worth[v]) else {
                    continue 'rows; // treat as affordable
                };
                let Some(next) = total.checked_add(part) else {
                    continue 'rows;
                };
                total = next;
                if total >= *demand {
                    continue 'rows;
                }
            }
            if total < *demand {
                return false;
            }
        }
        true
    }

    pub(crate) fn feasible_any(&self, state: &[u64]) -> bool {
        if !self.enabled {
            return true;
        }
        (0..self.members.len()).any(|m| self.feasible(state, m))
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm_checked(a: u128, b: u128) -> Option<u128> {
    (a / gcd(a, b)).checked_mul(b)
}

/// Failed states kept as an antichain of maximal elements; anything under
/// one of them fails by monotonicity.
struct DeadStore {
    states: Vec<Vec<u64>>,
}

impl DeadStore {
    fn new() -> DeadStore {
        DeadStore { states: Vec::new() }
    }

    fn covers(&self, candidate: &[u64]) -> bool {
        self.states
            .iter()
            .any(|s| s.iter().zip(candidate).all(|(a, b)| a >= b))
    }

    fn insert(&mut self, state: &[u64]) {
        if self.covers(state) {
            return;
        }
        self.states
            .retain(|s| !s.iter().zip(state).all(|(a, b)| b >= a));
        self.states.push(state.to_vec());
    }
}

struct Arena {
    // (counts, parent index, move that produced this state)
    nodes: Vec<(Vec<u64>, usize, Option<Move>)>,
}

impl Arena {
    fn witness(&self, mut idx: usize, start: &Distribution) -> MoveSequence {
        let mut moves = Vec::new();
        loop {
            let (_, parent, mv) = &self.nodes[idx];
            match mv {
                Some(m) => moves.push(*m),
                None => break,
            }
            idx = *parent;
        }
        moves.reverse();
        MoveSequence { start: start.clone(), moves }
    }
}

fn contained_member(state: &[u64], targets: &DistributionSet) -> Option<usize> {
    targets.members().iter().position(|t| {
        t.counts().iter().zip(state).all(|(need, have)| have >= need)
    })
}

fn search(
    g: &Graph,
    start: &Distribution,
    targets: &DistributionSet,
    opts: SolveOpts,
) -> Result<Option<AnyReach>> {
    if start.n() != g.n() || targets.n() != g.n() {
        return Err(Error::InvalidDistribution(format!(
            "start/targets must cover {} vertices",
            g.n()
        )));
    }
    let gate = PotentialGate::new(g, targets, !opts.paranoid);
    let mut dead = DeadStore::new();
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    let mut arena = Arena { nodes: Vec::new() };
    // Stack entries are arena indices still to expand.
    let mut stack: Vec<usize> = Vec::new();

    let root = start.counts().to_vec();
    if let Some(m) = contained_member(&root, targets) {
        return Ok(Some(AnyReach {
            member_index: m,
            target: targets.members()[m].clone(),
            sequence: MoveSequence::empty(start.clone()),
        }));
    }
    if !gate.feasible_any(&root) {
        return Ok(None);
    }
    visited.insert(root.clone());
    arena.nodes.push((root, 0, None));
    stack.push(0);

    while let Some(idx) = stack.pop() {
        // Children in reverse lexicographic order so the smallest
        // (source, target) move is expanded first.
        let parent_counts = arena.nodes[idx].0.clone();
        let mut children: Vec<(Move, Vec<u64>)> = Vec::new();
        for u in 0..g.n() {
            let have = parent_counts[u];
            for &(v, w) in g.neighbors(u) {
                if have < w {
                    continue;
                }
                let mut child = parent_counts.clone();
                child[u] -= w;
                child[v] += 1;
                children.push((Move { from: u, to: v, cost: w }, child));
            }
        }
        for (mv, child) in children.into_iter().rev() {
            if visited.contains(&child) {
                continue;
            }
            if let Some(m) = contained_member(&child, targets) {
                let node = arena.nodes.len();
                arena.nodes.push((child, idx, Some(mv)));
                return Ok(Some(AnyReach {
                    member_index: m,
                    target: targets.members()[m].clone(),
                    sequence: arena.witness(node, start),
                }));
            }
            if !opts.paranoid && (dead.covers(&child) || !gate.feasible_any(&child)) {
                continue;
            }
            visited.insert(child.clone());
            let node = arena.nodes.len();
            arena.nodes.push((child, idx, Some(mv)));
            stack.push(node);
        }
        if !opts.paranoid {
            dead.insert(&parent_counts);
        }
    }
    Ok(None)
}
