//! Standard graph families plus the small-graph enumerators and seeded
//! random graphs that sweeps and invariant tests quantify over.
//!
//! Every family builds with edge weight 2 (the plain pebbling convention)
//! unless a weight is part of the family itself.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::Rng;

/// Path on `n >= 1` vertices, `v0 - v1 - ... - v{n-1}`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 2)).collect();
    Graph::new(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidGraph("cycle needs n >= 3".into()));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 2)).collect();
    edges.push((n - 1, 0, 2));
    Graph::new(n, &edges)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, 2));
        }
    }
    Graph::new(n, &edges)
}

/// `d`-dimensional hypercube, `2^d` vertices indexed by bit pattern.
/// `hypercube(0)` is the one-vertex graph.
pub fn hypercube(d: u32) -> Result<Graph> {
    if d > 20 {
        return Err(Error::InvalidGraph("hypercube dimension too large".into()));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let u = v ^ (1 << b);
            if u > v {
                edges.push((v, u, 2));
            }
        }
    }
    Graph::new(n, &edges)
}

/// One vertex, no edges.
pub fn trivial() -> Graph {
    Graph::new(1, &[]).expect("one vertex is a valid graph")
}

/// K4 on x1..x4 where the perfect matching x1-x2, x3-x4 is cheap and the
/// other four edges are expensive. With `(light, heavy) = (2, 5)` this is
/// the standard example where a single vertex needs 13 pebbles but some
/// 13-pebble distributions still fail.
pub fn weighted_k4(light: u64, heavy: u64) -> Graph {
    Graph::new(
        4,
        &[
            (0, 1, light),
            (2, 3, light),
            (0, 2, heavy),
            (0, 3, heavy),
            (1, 2, heavy),
            (1, 3, heavy),
        ],
    )
    .and_then(|g| g.with_labels(vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()]))
    .expect("fixed K4 shape is valid")
}

/// Vertex pairs `(u, v)` with `u < v`, in the order the enumerators assign
/// bitmask bits: (0,1), (0,2), (1,2), (0,3), ...
fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Every connected labeled simple graph on `n` vertices, all weights 2, in
/// a fixed deterministic order. Exponential in `n^2`; meant for `n <= 6`.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return Err(Error::Unsupported(format!(
            "exhaustive graph enumeration supports 1..=6 vertices, got {n}"
        )));
    }
    let pairs = pair_order(n);
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, 2))
            .collect();
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Every connected labeled graph on `n` vertices with each edge weight
/// drawn from `weights`, in a fixed deterministic order.
pub fn all_connected_weighted_graphs(n: usize, weights: &[u64]) -> Result<Vec<Graph>> {
    if n == 0 || n > 5 {
        return Err(Error::Unsupported(format!(
            "exhaustive weighted enumeration supports 1..=5 vertices, got {n}"
        )));
    }
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::InvalidGraph("weight palette must be nonzero".into()));
    }
    let pairs = pair_order(n);
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let chosen: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if !Graph::new(n, &chosen.iter().map(|&(u, v)| (u, v, 2)).collect::<Vec<_>>())?
            .is_connected()
        {
            continue;
        }
        // Mixed-radix counter over weight choices, last edge fastest.
        let mut pick = vec![0usize; chosen.len()];
        loop {
            let edges: Vec<_> = chosen
                .iter()
                .zip(&pick)
                .map(|(&(u, v), &wi)| (u, v, weights[wi]))
                .collect();
            out.push(Graph::new(n, &edges)?);
            let mut i = chosen.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < weights.len() {
                    break;
                }
                pick[i] = 0;
            }
            if pick.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Random connected graph on `n` vertices: a random attachment tree plus
/// each remaining pair independently with probability 1/3. Weights 2.
/// Deterministic for a fixed RNG state.
pub fn random_connected<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("need n >= 1".into()));
    }
    let mut present = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        present.insert((u, v));
    }
    for (u, v) in pair_order(n) {
        if !present.contains(&(u, v)) && rng.random_bool(1.0 / 3.0) {
            present.insert((u, v));
        }
    }
    let edges: Vec<_> = pair_order(n)
        .into_iter()
        .filter(|p| present.contains(p))
        .map(|(u, v)| (u, v, 2))
        .collect();
    Graph::new(n, &edges)
}
