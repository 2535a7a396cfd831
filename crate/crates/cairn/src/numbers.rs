//! Pebbling numbers: the smallest total at which every start distribution
//! of that size reaches the target (universal forms), or reaches some
//! member of a target set chosen after seeing the start (target-selectable
//! forms). Every finite answer comes with a maximum-size failing witness.
//!
//! Two exact engines back the values: a full-lattice sweep that scores
//! every state of every size, and a failing-set sweep that tracks only the
//! states that cannot deliver. A third path, the literal scan, drives the
//! move solver over every start and exists to cross-check the other two.
//! Engine selection is automatic, driven by a provable lower bound on the
//! answer; a preference knob forces one engine for testing.

mod dense;
mod indexer;
mod sparse;

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::distribution::{
    self, delta, enumerate_distributions, gamma_target, s_t, Distribution, DistributionSet,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{self, SolveOpts};

/// Full-lattice sweep allowance under automatic selection, in states; past
/// this the failing-set engine takes over when it can.
const DENSE_STATE_LIMIT: u128 = 50_000_000;
/// Hard allowance when no fallback exists (weight-1 edges present or the
/// engine was forced).
const DENSE_HARD_LIMIT: u128 = 200_000_000;

/// A pebbling value: finite, or infinite when some start distribution of
/// every size fails (disconnected graphs).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(u64),
    Infinite,
}

impl Value {
    pub fn is_finite(self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinite => None,
        }
    }

    /// Product of two values. None when indeterminate (infinity times
    /// zero) or past u64.
    pub fn checked_mul(self, rhs: Value) -> Option<Value> {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => a.checked_mul(b).map(Value::Finite),
            (Value::Infinite, Value::Finite(0)) | (Value::Finite(0), Value::Infinite) => None,
            _ => Some(Value::Infinite),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Finite(v) => s.serialize_u64(*v),
            Value::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Value, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Value;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or the string \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Value, E> {
                Ok(Value::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Value, E> {
                u64::try_from(v)
                    .map(Value::Finite)
                    .map_err(|_| E::custom("negative value"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Value, E> {
                if v == "inf" {
                    Ok(Value::Infinite)
                } else {
                    Err(E::custom("expected \"inf\""))
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// Which quantifier produced a value; part of the result fingerprint, so
/// the same graph and targets under different quantifiers never collide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantifier {
    PiSet,
    PiDist,
    RhoSet,
}

impl Quantifier {
    pub fn tag(self) -> &'static str {
        match self {
            Quantifier::PiSet => "pi-set",
            Quantifier::PiDist => "pi-dist",
            Quantifier::RhoSet => "rho-set",
        }
    }
}

/// A computed pebbling value. For finite nonzero values the witness is the
/// enumeration-first failing distribution of size one below, the proof
/// that the value is not smaller.
#[derive(Clone, Debug, Serialize)]
pub struct NumberResult {
    pub value: Value,
    #[serde(rename = "failing_witness")]
    pub witness_failure: Option<Distribution>,
    pub quantifier: Quantifier,
    pub fingerprint: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EnginePreference {
    #[default]
    Auto,
    Dense,
    Sparse,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Cap on examined start distributions, counted across restarts and
    /// target chunks; None is unlimited.
    pub budget: Option<u64>,
    pub engine: EnginePreference,
}

/// Options for the literal scan.
#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    pub budget: Option<u64>,
    /// Forwarded to the move solver: turn off every prune there.
    pub paranoid: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Semantics {
    /// Every member must be reachable (pi family).
    All,
    /// Some member must be reachable (rho family).
    Any,
}

pub(crate) struct EngineOutcome {
    pub value: u64,
    pub witness: Option<Distribution>,
    /// Rank of the witness within its layer; u128::MAX when value is 0.
    pub witness_rank: u128,
}

/// Smallest N such that every size-N start reaches every member of
/// `targets`.
pub fn pi_set(g: &Graph, targets: &DistributionSet) -> Result<NumberResult> {
    pi_set_opts(g, targets, SolveOptions::default())
}

pub fn pi_set_opts(
    g: &Graph,
    targets: &DistributionSet,
    opts: SolveOptions,
) -> Result<NumberResult> {
    let (value, witness) = solve_set(g, targets, Semantics::All, opts)?;
    Ok(finish(g, &targets.canonical_bytes(), Quantifier::PiSet, value, witness))
}

/// Smallest N such that every size-N start reaches `target`.
pub fn pi_dist(g: &Graph, target: &Distribution) -> Result<NumberResult> {
    pi_dist_opts(g, target, SolveOptions::default())
}

pub fn pi_dist_opts(
    g: &Graph,
    target: &Distribution,
    opts: SolveOptions,
) -> Result<NumberResult> {
    let set = DistributionSet::singleton(target.clone());
    let (value, witness) = solve_set(g, &set, Semantics::All, opts)?;
    Ok(finish(g, &set.canonical_bytes(), Quantifier::PiDist, value, witness))
}

pub fn pi_vertex(g: &Graph, v: usize) -> Result<NumberResult> {
    pi_dist(g, &delta(g, v)?)
}

pub fn pi_t_vertex(g: &Graph, v: usize, t: u64) -> Result<NumberResult> {
    if t == 0 {
        return Err(Error::InvalidInput("t must be >= 1".into()));
    }
    pi_dist(g, &delta(g, v)?.scale(t))
}

/// Classical pebbling number: single-pebble targets over every vertex.
pub fn pi_graph(g: &Graph) -> Result<NumberResult> {
    pi_set(g, &s_t(g, 1)?)
}

pub fn pi_t_graph(g: &Graph, t: u64) -> Result<NumberResult> {
    pi_set(g, &s_t(g, t)?)
}

/// Cover pebbling number: one pebble on every vertex at once.
pub fn cover_number(g: &Graph) -> Result<NumberResult> {
    pi_dist(g, &gamma_target(g))
}

/// Smallest N such that every size-N start reaches some member of
/// `targets`, the member chosen after seeing the start.
pub fn rho_set(g: &Graph, targets: &DistributionSet) -> Result<NumberResult> {
    rho_set_opts(g, targets, SolveOptions::default())
}

pub fn rho_set_opts(
    g: &Graph,
    targets: &DistributionSet,
    opts: SolveOptions,
) -> Result<NumberResult> {
    let (value, witness) = solve_set(g, targets, Semantics::Any, opts)?;
    Ok(finish(g, &targets.canonical_bytes(), Quantifier::RhoSet, value, witness))
}

pub fn rho_t(g: &Graph, t: u64) -> Result<NumberResult> {
    rho_set(g, &s_t(g, t)?)
}

pub fn rho_vertex(g: &Graph, v: usize) -> Result<NumberResult> {
    rho_set(g, &DistributionSet::singleton(delta(g, v)?))
}

/// Smallest N such that N pebbles on any single vertex reach `target`.
/// The additive delivery estimate (demand times cheapest path cost, summed
/// over the target) is tried first and verified in both directions; any
/// surprise falls back to a plain ascending scan.
pub fn single_vertex_threshold(g: &Graph, target: &Distribution) -> Result<Value> {
    if target.n() != g.n() {
        return Err(Error::InvalidDistribution(format!(
            "target covers {} vertices on a graph with {}",
            target.n(),
            g.n()
        )));
    }
    if target.is_zero() {
        return Ok(Value::Finite(0));
    }
    let cost = g.all_pairs_cost();
    let cap = pi_bound_u64(g, &DistributionSet::singleton(target.clone()))?;
    let mut worst: u64 = 0;
    for u in 0..g.n() {
        let mut est: u128 = 0;
        let mut lb: u128 = 0;
        for t in target.support() {
            let Some(c) = cost[u][t] else {
                return Ok(Value::Infinite);
            };
            let part = target.count(t) as u128 * c as u128;
            est += part;
            lb = lb.max(part);
        }
        let est = u64::try_from(est)
            .map_err(|_| Error::Unsupported("delivery estimate exceeds u64".into()))?;
        let reaches = |nn: u64| -> Result<bool> {
            let start = delta(g, u)?.scale(nn);
            Ok(solver::is_reachable(g, &start, target)?.is_some())
        };
        let exact = if reaches(est)? && (est == 0 || !reaches(est - 1)?) {
            est
        } else {
            let mut nn = lb as u64;
            loop {
                if nn > cap {
                    return Err(Error::BoundExceeded { bound: cap });
                }
                if reaches(nn)? {
                    break nn;
                }
                nn += 1;
            }
        };
        worst = worst.max(exact);
    }
    Ok(Value::Finite(worst))
}

/// Size certified to make every start reach every member: with
/// P = max over members of (member total weighted by the largest pairwise
/// delivery cost), any start of size n(P-1)+1 piles P somewhere.
pub fn certified_upper_bound(g: &Graph, targets: &DistributionSet) -> Result<Value> {
    if targets.n() != g.n() {
        return Err(Error::InvalidDistribution(format!(
            "targets cover {} vertices on a graph with {}",
            targets.n(),
            g.n()
        )));
    }
    if pi_infinite(g, targets) {
        return Ok(Value::Infinite);
    }
    Ok(Value::Finite(pi_bound_u64(g, targets)?))
}

/// Closed form for the classical cycle value: 2^m on even cycles C_2m,
/// (2^(2m+1) + 1)/3 on C_(4m-1), (2^(2m+2) - 1)/3 on C_(4m+1).
pub fn cycle_closed_form(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidInput("cycles need n >= 3".into()));
    }
    let shifted = |e: u32| -> Result<u64> {
        if e >= 63 {
            return Err(Error::Unsupported("cycle value exceeds u64".into()));
        }
        Ok(1u64 << e)
    };
    if n % 2 == 0 {
        shifted(n as u32 / 2)
    } else if n % 4 == 3 {
        let m = (n as u32 + 1) / 4;
        Ok((shifted(2 * m + 1)? + 1) / 3)
    } else {
        let m = (n as u32 - 1) / 4;
        Ok((shifted(2 * m + 2)? - 1) / 3)
    }
}

/// Literal ascending scan for the universal form: runs the move solver on
/// every start of every size. Slow and simple; the cross-check path.
pub fn pi_set_by_search(
    g: &Graph,
    targets: &DistributionSet,
    opts: ScanOptions,
) -> Result<NumberResult> {
    scan(g, targets, Semantics::All, Quantifier::PiSet, opts)
}

/// Literal ascending scan for the target-selectable form.
pub fn rho_set_by_search(
    g: &Graph,
    targets: &DistributionSet,
    opts: ScanOptions,
) -> Result<NumberResult> {
    scan(g, targets, Semantics::Any, Quantifier::RhoSet, opts)
}

/// The fingerprint a set query under `quantifier` will carry, computable
/// without running it. Single-distribution queries fingerprint as the
/// singleton set. Cache layers use this as their lookup key.
pub fn query_fingerprint(g: &Graph, targets: &DistributionSet, quantifier: Quantifier) -> String {
    fingerprint(g, &targets.canonical_bytes(), quantifier.tag())
}

pub(crate) fn fingerprint(g: &Graph, target_bytes: &[u8], tag: &str) -> String {
    let mut h = Sha256::new();
    h.update(g.canonical_bytes());
    h.update(target_bytes);
    h.update(tag.as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn finish(
    g: &Graph,
    target_bytes: &[u8],
    quantifier: Quantifier,
    value: Value,
    witness: Option<Distribution>,
) -> NumberResult {
    NumberResult {
        value,
        witness_failure: witness,
        quantifier,
        fingerprint: fingerprint(g, target_bytes, quantifier.tag()),
    }
}

fn solve_set(
    g: &Graph,
    targets: &DistributionSet,
    semantics: Semantics,
    opts: SolveOptions,
) -> Result<(Value, Option<Distribution>)> {
    if targets.n() != g.n() {
        return Err(Error::InvalidDistribution(format!(
            "targets cover {} vertices on a graph with {}",
            targets.n(),
            g.n()
        )));
    }
    let infinite = match semantics {
        Semantics::All => pi_infinite(g, targets),
        Semantics::Any => rho_infinite(g, targets),
    };
    if infinite {
        return Ok((Value::Infinite, None));
    }
    let bound = match semantics {
        Semantics::All => pi_bound_u64(g, targets)?,
        Semantics::Any => rho_bound_u64(g, targets)?,
    };
    let mut examined = 0u64;
    let out = dispatch(g, targets, semantics, bound, opts, &mut examined)?;
    Ok((Value::Finite(out.value), out.witness))
}

fn dispatch(
    g: &Graph,
    targets: &DistributionSet,
    semantics: Semantics,
    bound: u64,
    opts: SolveOptions,
    examined: &mut u64,
) -> Result<EngineOutcome> {
    let sparse_ok =
        !g.has_unit_edges() && (64 - bound.leading_zeros()) as usize * g.n() <= 128;
    match opts.engine {
        EnginePreference::Dense => {
            let mut allowance = DENSE_HARD_LIMIT;
            dense_chunks(g, targets, semantics, bound, opts.budget, examined, &mut allowance)?
                .ok_or_else(|| {
                    Error::Unsupported("state space exceeds the full-sweep allowance".into())
                })
        }
        EnginePreference::Sparse => sparse_chunks(g, targets, semantics, bound, opts.budget, examined),
        EnginePreference::Auto => {
            let lower = selection_lower_bound(g, targets, semantics, bound);
            let chunks = match semantics {
                Semantics::All => targets.len().div_ceil(16) as u128,
                Semantics::Any => 1,
            };
            let est = cumulative_states(g.n(), lower)
                .map_or(u128::MAX, |c| c.saturating_mul(chunks));
            if est <= DENSE_STATE_LIMIT || !sparse_ok {
                let mut allowance = if sparse_ok {
                    DENSE_STATE_LIMIT
                } else {
                    DENSE_HARD_LIMIT
                };
                match dense_chunks(g, targets, semantics, bound, opts.budget, examined, &mut allowance)? {
                    Some(out) => Ok(out),
                    None if sparse_ok => {
                        sparse_chunks(g, targets, semantics, bound, opts.budget, examined)
                    }
                    None => Err(Error::Unsupported(
                        "state space exceeds the full-sweep allowance".into(),
                    )),
                }
            } else {
                sparse_chunks(g, targets, semantics, bound, opts.budget, examined)
            }
        }
    }
}

/// Runs the full sweep, 16 targets at a time for the universal form.
/// None means the allowance ran out mid-sweep.
fn dense_chunks(
    g: &Graph,
    targets: &DistributionSet,
    semantics: Semantics,
    bound: u64,
    budget: Option<u64>,
    examined: &mut u64,
    allowance: &mut u128,
) -> Result<Option<EngineOutcome>> {
    match semantics {
        Semantics::Any => {
            match dense::run(g, targets.members(), semantics, bound, budget, examined, allowance)? {
                dense::DenseRun::Done(out) => Ok(Some(out)),
                dense::DenseRun::Spill => Ok(None),
            }
        }
        Semantics::All => {
            let mut best: Option<EngineOutcome> = None;
            for chunk in targets.members().chunks(16) {
                match dense::run(g, chunk, semantics, bound, budget, examined, allowance)? {
                    dense::DenseRun::Done(out) => merge_outcome(&mut best, out),
                    dense::DenseRun::Spill => return Ok(None),
                }
            }
            Ok(best)
        }
    }
}

/// Runs the failing-set sweep, one target at a time for the universal form
/// (the universal value over a set is the max over its members, and single
/// targets keep the tracked sets small).
fn sparse_chunks(
    g: &Graph,
    targets: &DistributionSet,
    semantics: Semantics,
    bound: u64,
    budget: Option<u64>,
    examined: &mut u64,
) -> Result<EngineOutcome> {
    match semantics {
        Semantics::Any => sparse::run(g, targets.members(), semantics, bound, budget, examined),
        Semantics::All => {
            let mut best: Option<EngineOutcome> = None;
            for chunk in targets.members().chunks(1) {
                let out = sparse::run(g, chunk, semantics, bound, budget, examined)?;
                merge_outcome(&mut best, out);
            }
            Ok(best.expect("target sets are nonempty"))
        }
    }
}

/// Keeps the larger value; on ties the witness earliest in enumeration
/// order, so chunking cannot change the reported witness.
fn merge_outcome(best: &mut Option<EngineOutcome>, out: EngineOutcome) {
    match best {
        None => *best = Some(out),
        Some(b) => {
            if out.value > b.value
                || (out.value == b.value && out.witness_rank < b.witness_rank)
            {
                *best = Some(out);
            }
        }
    }
}

/// The universal value is infinite iff pebbles can be dumped in a
/// component that some nonzero member needs to escape.
fn pi_infinite(g: &Graph, targets: &DistributionSet) -> bool {
    !g.is_connected() && targets.members().iter().any(|m| !m.is_zero())
}

/// The target-selectable value is infinite iff some component supports no
/// member at all: everything dumped there serves nobody.
fn rho_infinite(g: &Graph, targets: &DistributionSet) -> bool {
    g.components()
        .iter()
        .any(|comp| !targets.members().iter().any(|m| supported_within(m, comp)))
}

fn supported_within(m: &Distribution, comp: &[usize]) -> bool {
    m.support().iter().all(|v| comp.binary_search(v).is_ok())
}

fn pi_bound_u64(g: &Graph, targets: &DistributionSet) -> Result<u64> {
    let cost = g.all_pairs_cost();
    let cmax = max_finite_cost(&cost);
    let p = targets
        .members()
        .iter()
        .map(|m| weighted_total(m, cmax))
        .max()
        .unwrap_or(1)
        .max(1);
    let b = (g.n() as u128)
        .checked_mul(p - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::Unsupported("certified bound exceeds u128".into()))?;
    u64::try_from(b).map_err(|_| Error::Unsupported("certified bound exceeds u64".into()))
}

/// Component-wise pigeonhole: once some component holds its own certified
/// amount, its cheapest supported member is reachable.
fn rho_bound_u64(g: &Graph, targets: &DistributionSet) -> Result<u64> {
    let cost = g.all_pairs_cost();
    let mut total: u128 = 1;
    for comp in g.components() {
        let mut cmax = 1u64;
        for &u in &comp {
            for &v in &comp {
                if let Some(c) = cost[u][v] {
                    cmax = cmax.max(c);
                }
            }
        }
        let b_c = targets
            .members()
            .iter()
            .filter(|m| supported_within(m, &comp))
            .map(|m| {
                let p = weighted_total(m, cmax).max(1);
                comp.len() as u128 * (p - 1) + 1
            })
            .min()
            .ok_or_else(|| {
                Error::Inconsistent("finite value requested with an unservable component".into())
            })?;
        total = total
            .checked_add(b_c - 1)
            .ok_or_else(|| Error::Unsupported("certified bound exceeds u128".into()))?;
    }
    u64::try_from(total).map_err(|_| Error::Unsupported("certified bound exceeds u64".into()))
}

fn weighted_total(m: &Distribution, cmax: u64) -> u128 {
    m.counts().iter().map(|&c| c as u128 * cmax as u128).sum()
}

fn max_finite_cost(cost: &[Vec<Option<u64>>]) -> u64 {
    cost.iter()
        .flat_map(|row| row.iter().flatten().copied())
        .max()
        .unwrap_or(1)
}

/// Provable lower bound on the answer: a pile of size c-1 at v cannot
/// deliver t's demand when c-1 is under demand times delivery cost, so it
/// fails the member outright. Universal form: worst member anywhere.
/// Target-selectable: worst vertex under its best member.
fn selection_lower_bound(
    g: &Graph,
    targets: &DistributionSet,
    semantics: Semantics,
    bound: u64,
) -> u64 {
    let cost = g.all_pairs_cost();
    let mut lower = 0u64;
    for v in 0..g.n() {
        let thresholds = targets.members().iter().map(|m| {
            m.support()
                .iter()
                .map(|&t| match cost[v][t] {
                    Some(c) => m.count(t).saturating_mul(c),
                    None => u64::MAX,
                })
                .max()
                .unwrap_or(0)
        });
        let at_v = match semantics {
            Semantics::All => thresholds.max(),
            Semantics::Any => thresholds.min(),
        }
        .unwrap_or(0);
        lower = lower.max(at_v);
    }
    lower.min(bound)
}

/// States of size up to `l` inclusive: C(l + n, n) by the hockey stick.
fn cumulative_states(n: usize, l: u64) -> Option<u128> {
    distribution::binomial(l + n as u64, n as u64).ok()
}

fn scan(
    g: &Graph,
    targets: &DistributionSet,
    semantics: Semantics,
    quantifier: Quantifier,
    opts: ScanOptions,
) -> Result<NumberResult> {
    if targets.n() != g.n() {
        return Err(Error::InvalidDistribution(format!(
            "targets cover {} vertices on a graph with {}",
            targets.n(),
            g.n()
        )));
    }
    let infinite = match semantics {
        Semantics::All => pi_infinite(g, targets),
        Semantics::Any => rho_infinite(g, targets),
    };
    if infinite {
        return Ok(finish(g, &targets.canonical_bytes(), quantifier, Value::Infinite, None));
    }
    let bound = match semantics {
        Semantics::All => pi_bound_u64(g, targets)?,
        Semantics::Any => rho_bound_u64(g, targets)?,
    };
    let solve_opts = SolveOpts { paranoid: opts.paranoid };
    let mut examined = 0u64;
    let check = |start: &Distribution, examined: &mut u64| -> Result<bool> {
        if let Some(b) = opts.budget {
            if *examined >= b {
                return Err(Error::BudgetExceeded { examined: *examined });
            }
        }
        *examined += 1;
        match semantics {
            Semantics::All => {
                for member in targets.members() {
                    if solver::is_reachable_opts(g, start, member, solve_opts)?.is_none() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Semantics::Any => {
                Ok(solver::reach_any_opts(g, start, targets, solve_opts)?.is_some())
            }
        }
    };
    let mut prev_fail: Option<Distribution> = None;
    for k in 0..=bound {
        let mut first_fail: Option<Distribution> = None;
        for start in enumerate_distributions(g, k) {
            if !check(&start, &mut examined)? && first_fail.is_none() {
                first_fail = Some(start);
            }
        }
        match first_fail {
            Some(d) => prev_fail = Some(d),
            None => {
                // The frontier is monotone: every larger size must succeed
                // too. Verify one layer up before trusting the value.
                for start in enumerate_distributions(g, k + 1) {
                    if !check(&start, &mut examined)? {
                        return Err(Error::Inconsistent(format!(
                            "sizes {k} all reach but {:?} of size {} does not",
                            start.counts(),
                            k + 1
                        )));
                    }
                }
                return Ok(finish(
                    g,
                    &targets.canonical_bytes(),
                    quantifier,
                    Value::Finite(k),
                    prev_fail,
                ));
            }
        }
    }
    Err(Error::BoundExceeded { bound })
}
