//! Pendant-vertex augmentation and the projection maps that pull pebbling
//! witnesses from the augmented graph, or its product with a second factor,
//! back to the original graph. On top of those sit three report-producing
//! verifiers: the pendant equality (st-fold demand at the attachment equals
//! t-fold demand at the pendant), the doubling inequalities on products,
//! and the path/cycle correspondence for endpoint target sets.

use serde::Serialize;

use crate::distribution::{self, Distribution};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{product_coords, product_index, Graph, VertexId};
use crate::numbers::{self, Value};
use crate::solver::{self, Move, MoveSequence};

/// A graph plus one pendant vertex. The pendant always takes index
/// `base.n()`, so projections can address rows without bookkeeping.
#[derive(Clone, Debug)]
pub struct AugmentedGraph {
    base: Graph,
    graph: Graph,
    attach: VertexId,
    weight: u64,
}

impl AugmentedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The augmented graph itself: base plus the pendant edge.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Index of the pendant vertex, always `base.n()`.
    pub fn pendant(&self) -> VertexId {
        self.base.n()
    }

    /// The base vertex the pendant hangs from.
    pub fn attach(&self) -> VertexId {
        self.attach
    }

    /// Weight of the pendant edge; also the fold multiplier of the
    /// projection maps below.
    pub fn weight(&self) -> u64 {
        self.weight
    }
}

/// Returns `g` plus one new vertex wired to `attach` by a single edge of
/// the given weight. Labels, when present, gain a primed copy of the
/// attachment's name for the new vertex.
pub fn augment(g: &Graph, attach: VertexId, weight: u64) -> Result<AugmentedGraph> {
    if attach >= g.n() {
        return Err(Error::InvalidGraph(format!(
            "attach vertex {attach} out of range for n={}",
            g.n()
        )));
    }
    if weight == 0 {
        return Err(Error::InvalidGraph("pendant edge weight must be >= 1".into()));
    }
    let n = g.n();
    let mut edges: Vec<(VertexId, VertexId, u64)> =
        g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
    edges.push((attach, n, weight));
    let mut graph = Graph::new(n + 1, &edges)?;
    if let Some(labels) = g.labels() {
        let mut named = labels.to_vec();
        named.push(format!("{}'", g.vertex_name(attach)));
        graph = graph.with_labels(named)?;
    }
    Ok(AugmentedGraph { base: g.clone(), graph, attach, weight })
}

/// Folds a distribution on `aug.graph() x h` down to `aug.base() x h`:
/// every pebble on the pendant row becomes `aug.weight()` pebbles on the
/// attachment row, same column; everything else is copied. Use
/// `families::trivial()` for `h` to project a distribution on the
/// augmented graph alone.
pub fn project_distribution(
    aug: &AugmentedGraph,
    h: &Graph,
    d: &Distribution,
) -> Result<Distribution> {
    let hn = h.n();
    let base_n = aug.base.n();
    if d.n() != (base_n + 1) * hn {
        return Err(Error::InvalidDistribution(format!(
            "distribution has {} entries, augmented product needs {}",
            d.n(),
            (base_n + 1) * hn
        )));
    }
    let mut out = vec![0u64; base_n * hn];
    for x in 0..base_n {
        for y in 0..hn {
            out[product_index(x, y, hn)] = d.count(product_index(x, y, hn));
        }
    }
    for y in 0..hn {
        let folded = aug
            .weight
            .checked_mul(d.count(product_index(base_n, y, hn)))
            .and_then(|f| f.checked_add(out[product_index(aug.attach, y, hn)]))
            .ok_or_else(|| Error::InvalidDistribution("folded count overflows u64".into()))?;
        out[product_index(aug.attach, y, hn)] = folded;
    }
    Ok(Distribution::new(out))
}

/// Rewrites a witness on `aug.graph() x h` into one on `aug.base() x h`
/// whose end state contains the projected end state of the input. Moves
/// translate case by case: moves not touching the pendant row copy over;
/// hops along the pendant row become `aug.weight()` copies of the same hop
/// on the attachment row; hops between the pendant row and the attachment
/// row erase (into the pendant they fold back exactly, out of it they only
/// shed surplus, which is why the result is containment, not equality).
pub fn project_move_sequence(
    aug: &AugmentedGraph,
    h: &Graph,
    seq: &MoveSequence,
) -> Result<MoveSequence> {
    let aug_product = aug.graph.cartesian_product(h);
    let aug_end = seq.replay(&aug_product)?;
    let hn = h.n();
    let pend = aug.pendant();
    let start = project_distribution(aug, h, &seq.start)?;
    let mut moves = Vec::new();
    for m in &seq.moves {
        let (xu, yu) = product_coords(m.from, hn);
        let (xv, yv) = product_coords(m.to, hn);
        if xu != pend && xv != pend {
            moves.push(Move {
                from: product_index(xu, yu, hn),
                to: product_index(xv, yv, hn),
                cost: m.cost,
            });
        } else if xu == pend && xv == pend {
            let hop = Move {
                from: product_index(aug.attach, yu, hn),
                to: product_index(aug.attach, yv, hn),
                cost: m.cost,
            };
            moves.extend(std::iter::repeat(hop).take(aug.weight as usize));
        }
        // Mixed cases are hops across the pendant edge; replay above proved
        // they are valid, and they erase to nothing.
    }
    let out = MoveSequence { start, moves };
    let base_product = aug.base.cartesian_product(h);
    let end = out.replay(&base_product)?;
    if !end.contains(&project_distribution(aug, h, &aug_end)?)? {
        return Err(Error::Inconsistent(
            "projected witness fails to cover the projected end state".into(),
        ));
    }
    Ok(out)
}

/// Failing starts backing the two sides of an equality or inequality
/// report, when the respective values are finite and positive.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SideWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Distribution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Distribution>,
}

/// Outcome of [`verify_prop_2s`]: both sides of the pendant equality plus
/// the failing starts that certify each side is not smaller.
#[derive(Clone, Debug, Serialize)]
pub struct EqualityReport {
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
    pub witnesses: SideWitnesses,
}

/// Checks that the st-fold demand at `attach` in `g` equals the t-fold
/// demand at the pendant of the weight-s augmentation. Both sides are
/// computed independently and compared exactly.
pub fn verify_prop_2s(g: &Graph, attach: VertexId, s: u64, t: u64) -> Result<EqualityReport> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidInput("fold factors must be >= 1".into()));
    }
    let st = s
        .checked_mul(t)
        .ok_or_else(|| Error::InvalidInput("fold factor product overflows".into()))?;
    let aug = augment(g, attach, s)?;
    let (left, right) = std::thread::scope(|sc| {
        let right = sc.spawn(|| numbers::pi_t_vertex(aug.graph(), aug.pendant(), t));
        let left = numbers::pi_t_vertex(g, attach, st);
        (left, right.join().expect("pendant side panicked"))
    });
    let (left, right) = (left?, right?);
    Ok(EqualityReport {
        lhs: left.value,
        rhs: right.value,
        holds: left.value == right.value,
        witnesses: SideWitnesses { lhs: left.witness_failure, rhs: right.witness_failure },
    })
}

/// The two product bounds a doubled fold factor must stay under: double
/// the first factor's share or the second's.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DoublingBounds {
    pub via_first_factor: Value,
    pub via_second_factor: Value,
}

/// Outcome of [`verify_doubling_instance`].
#[derive(Clone, Debug, Serialize)]
pub struct DoublingReport {
    pub lhs: Value,
    pub rhs: DoublingBounds,
    pub holds: bool,
    pub witnesses: SideWitnesses,
}

/// Computes the 2st-fold demand at `(x, y)` on `g x h` and checks it
/// against both factorizations that place the doubling on either factor:
/// the 2s-fold demand at `x` times the t-fold demand at `y`, and the
/// s-fold demand at `x` times the 2t-fold demand at `y`.
pub fn verify_doubling_instance(
    g: &Graph,
    h: &Graph,
    x: VertexId,
    y: VertexId,
    s: u64,
    t: u64,
) -> Result<DoublingReport> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidInput("fold factors must be >= 1".into()));
    }
    if x >= g.n() || y >= h.n() {
        return Err(Error::InvalidInput("target vertex out of range".into()));
    }
    let two_st = s
        .checked_mul(t)
        .and_then(|st| st.checked_mul(2))
        .ok_or_else(|| Error::InvalidInput("fold factor product overflows".into()))?;
    let product = g.cartesian_product(h);
    let target = product_index(x, y, h.n());
    let (lhs, gx2, hy, gx, hy2) = std::thread::scope(|sc| {
        let gx2 = sc.spawn(|| numbers::pi_t_vertex(g, x, 2 * s));
        let hy = sc.spawn(|| numbers::pi_t_vertex(h, y, t));
        let gx = sc.spawn(|| numbers::pi_t_vertex(g, x, s));
        let hy2 = sc.spawn(|| numbers::pi_t_vertex(h, y, 2 * t));
        let lhs = numbers::pi_t_vertex(&product, target, two_st);
        let join = |h: std::thread::ScopedJoinHandle<'_, Result<numbers::NumberResult>>| {
            h.join().expect("factor computation panicked")
        };
        (lhs, join(gx2), join(hy), join(gx), join(hy2))
    });
    let (lhs, gx2, hy, gx, hy2) = (lhs?, gx2?, hy?, gx?, hy2?);
    let bound = |a: &numbers::NumberResult, b: &numbers::NumberResult| {
        a.value
            .checked_mul(b.value)
            .ok_or_else(|| Error::Inconsistent("zero-times-infinite product bound".into()))
    };
    let rhs = DoublingBounds {
        via_first_factor: bound(&gx2, &hy)?,
        via_second_factor: bound(&gx, &hy2)?,
    };
    Ok(DoublingReport {
        lhs: lhs.value,
        holds: lhs.value <= rhs.via_first_factor && lhs.value <= rhs.via_second_factor,
        rhs,
        witnesses: SideWitnesses { lhs: lhs.witness_failure, rhs: None },
    })
}

/// Outcome of [`verify_g_of_p`]. For corners whose matching cycle would
/// need fewer than three vertices nothing is computed; `excluded` marks
/// them and `holds` stays true because nothing is claimed.
#[derive(Clone, Debug, Serialize)]
pub struct GOfPReport {
    pub n: usize,
    pub i: u32,
    pub cycle_len: usize,
    pub excluded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_blocked: Option<bool>,
    pub holds: bool,
}

/// Cross-checks the endpoint-selectable demand on the n-vertex path
/// against the pebbling number of the cycle on `n + 2i - 1` vertices,
/// with targets of `2^i` pebbles on either path end. Also replays the
/// extremal start one pebble short of the value to confirm it reaches
/// neither endpoint target, and compares both computed numbers with the
/// cycle closed form.
pub fn verify_g_of_p(n: usize, i: u32) -> Result<GOfPReport> {
    if n < 2 {
        return Err(Error::InvalidInput("path corner needs n >= 2".into()));
    }
    let cycle_len = n + 2 * i as usize - 1;
    if cycle_len < 3 {
        return Ok(GOfPReport {
            n,
            i,
            cycle_len,
            excluded: true,
            lhs: None,
            rhs: None,
            closed_form: None,
            critical_size: None,
            critical_blocked: None,
            holds: true,
        });
    }
    let fold = 1u64
        .checked_shl(i)
        .ok_or_else(|| Error::InvalidInput("2^i overflows u64".into()))?;
    let path = families::path(n)?;
    let targets = distribution::d_t(&path, fold)?;
    let cycle = families::cycle(cycle_len)?;
    let closed = numbers::cycle_closed_form(cycle_len)?;
    let (rho, pi_cycle) = std::thread::scope(|sc| {
        let cycle_side = sc.spawn(|| numbers::pi_graph(&cycle));
        let rho = numbers::rho_set(&path, &targets);
        (rho, cycle_side.join().expect("cycle side panicked"))
    });
    let (rho, pi_cycle) = (rho?, pi_cycle?);
    let critical = distribution::critical_path_distribution(n, i)?;
    let blocked = solver::reach_any(&path, &critical, &targets)?.is_none();
    let holds = rho.value == pi_cycle.value
        && rho.value == Value::Finite(closed)
        && blocked
        && critical.size() == closed - 1;
    Ok(GOfPReport {
        n,
        i,
        cycle_len,
        excluded: false,
        lhs: Some(rho.value),
        rhs: Some(pi_cycle.value),
        closed_form: Some(closed),
        critical_size: Some(critical.size()),
        critical_blocked: Some(blocked),
        holds,
    })
}
