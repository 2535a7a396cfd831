//! Weighted undirected graphs and the cartesian product.
//!
//! A move across an edge of weight `w` consumes `w` pebbles at one endpoint
//! and delivers a single pebble to the other, so routing one pebble along a
//! path costs the *product* of the edge weights on it. `min_path_cost` is
//! the shortest-path notion under that cost and `metric_closure` completes a
//! connected graph under it. Plain (unweighted) pebbling is the
//! all-weights-2 special case.
//!
//! Graphs are immutable once built. Witnesses, cache keys and fingerprints
//! refer to a graph by its canonical byte form, so nothing mutates in place.

use crate::error::{Error, Result};

/// Vertex index in `0..n`.
pub type VertexId = usize;

/// Undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
    adj: Vec<Vec<(VertexId, u64)>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Edges may be given in either
    /// endpoint order; they are normalized to `u < v` and sorted. Rejects
    /// `n == 0`, self-loops, duplicate edges and zero weights.
    pub fn new(n: usize, edges: &[(VertexId, VertexId, u64)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex set must be nonempty".into()));
        }
        let mut norm: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(a, b, w) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if w == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) has zero weight"
                )));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            norm.push(Edge { u, v, weight: w });
        }
        norm.sort_by_key(|e| (e.u, e.v));
        for pair in norm.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({},{})",
                    pair[0].u, pair[0].v
                )));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &norm {
            adj[e.u].push((e.v, e.weight));
            adj[e.v].push((e.u, e.weight));
        }
        for list in &mut adj {
            list.sort_by_key(|&(v, _)| v);
        }
        Ok(Graph {
            n,
            edges: norm,
            labels: None,
            adj,
        })
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `u` with edge weights, ascending by neighbor index.
    pub fn neighbors(&self, u: VertexId) -> &[(VertexId, u64)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u].len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name for a vertex: the attached label, or `v{index}`.
    pub fn vertex_name(&self, v: VertexId) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => format!("v{v}"),
        }
    }

    /// True if any edge has weight 1. Weight-1 moves do not shrink a
    /// distribution, which changes termination arguments downstream, so
    /// callers surface this in their reports.
    pub fn has_unit_edges(&self) -> bool {
        self.edges.iter().any(|e| e.weight == 1)
    }

    pub fn max_edge_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &(v, _) in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Cheapest cost of ferrying one pebble from `u` to `v`: the minimum
    /// over `u`-`v` paths of the product of edge weights. `Some(1)` when
    /// `u == v`, `None` when disconnected.
    pub fn min_path_cost(&self, u: VertexId, v: VertexId) -> Option<u64> {
        self.all_pairs_cost()[u][v]
    }

    /// `min_path_cost` for every ordered pair, by multiplicative
    /// Floyd-Warshall. Products saturate at `u64::MAX`, which is safe
    /// because every real query compares against far smaller thresholds.
    pub fn all_pairs_cost(&self) -> Vec<Vec<Option<u64>>> {
        let n = self.n;
        let mut d: Vec<Vec<Option<u64>>> = vec![vec![None; n]; n];
        for v in 0..n {
            d[v][v] = Some(1);
        }
        for e in &self.edges {
            let best = d[e.u][e.v].map_or(e.weight, |c| c.min(e.weight));
            d[e.u][e.v] = Some(best);
            d[e.v][e.u] = Some(best);
        }
        for k in 0..n {
            for i in 0..n {
                let Some(ik) = d[i][k] else { continue };
                for j in 0..n {
                    let Some(kj) = d[k][j] else { continue };
                    let via = ik.saturating_mul(kj);
                    if d[i][j].is_none_or(|c| via < c) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
        d
    }

    /// Complete graph on the same vertices with `weight(u,v) =
    /// min_path_cost(u,v)`. Idempotent. Requires a connected input, since a
    /// missing path has no finite weight.
    pub fn metric_closure(&self) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::InvalidGraph(
                "metric closure needs a connected graph".into(),
            ));
        }
        let cost = self.all_pairs_cost();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                edges.push((u, v, cost[u][v].expect("connected")));
            }
        }
        let g = Graph::new(self.n, &edges)?;
        match &self.labels {
            Some(ls) => g.with_labels(ls.clone()),
            None => Ok(g),
        }
    }

    /// Cartesian product. Vertex `(x, y)` of `self x other` has index
    /// `x * other.n() + y`; `(x, y)` and `(x', y')` are adjacent when one
    /// coordinate agrees and the other pair is adjacent in its factor, the
    /// edge keeping the factor edge's weight.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let hn = other.n;
        let mut edges = Vec::new();
        for e in &self.edges {
            for y in 0..hn {
                edges.push((e.u * hn + y, e.v * hn + y, e.weight));
            }
        }
        for x in 0..self.n {
            for e in &other.edges {
                edges.push((x * hn + e.u, x * hn + e.v, e.weight));
            }
        }
        Graph::new(self.n * hn, &edges).expect("product of valid graphs is valid")
    }

    /// Induced subgraph on `keep` (sorted, deduplicated by the caller being
    /// sane; duplicates rejected by the constructor). Returns the subgraph
    /// and the old-index-to-new-index map.
    pub fn induced(&self, keep: &[VertexId]) -> Result<(Graph, Vec<Option<VertexId>>)> {
        let mut map = vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.n {
                return Err(Error::InvalidGraph(format!("vertex {old} out of range")));
            }
            if map[old].is_some() {
                return Err(Error::InvalidGraph(format!("vertex {old} repeated")));
            }
            map[old] = Some(new);
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            if let (Some(u), Some(v)) = (map[e.u], map[e.v]) {
                edges.push((u, v, e.weight));
            }
        }
        Ok((Graph::new(keep.len(), &edges)?, map))
    }

    /// Stable byte form used for fingerprints and cache keys: vertex count
    /// plus the sorted edge list. Labels are display-only and excluded.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut s = format!("g{};", self.n);
        for e in &self.edges {
            s.push_str(&format!("{}-{}-{};", e.u, e.v, e.weight));
        }
        s.into_bytes()
    }
}

/// Index of `(x, y)` in a product whose right factor has `hn` vertices.
pub fn product_index(x: VertexId, y: VertexId, hn: usize) -> VertexId {
    x * hn + y
}

/// Inverse of [`product_index`].
pub fn product_coords(idx: VertexId, hn: usize) -> (VertexId, VertexId) {
    (idx / hn, idx % hn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(Graph::new(0, &[]).is_err());
        assert!(Graph::new(2, &[(0, 0, 2)]).is_err());
        assert!(Graph::new(2, &[(0, 1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 1, 2), (1, 0, 2)]).is_err());
        assert!(Graph::new(2, &[(0, 2, 2)]).is_err());
    }

    #[test]
    fn edges_normalize_to_sorted_low_high() {
        let g = Graph::new(3, &[(2, 1, 2), (1, 0, 3)]).unwrap();
        let got: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
        assert_eq!(got, vec![(0, 1, 3), (1, 2, 2)]);
    }

    #[test]
    fn path_costs_multiply_along_the_path() {
        // Two weight-2 hops cost 4; a vertex reaches itself for 1.
        let p3 = families::path(3).unwrap();
        assert_eq!(p3.min_path_cost(0, 2), Some(4));
        assert_eq!(p3.min_path_cost(1, 1), Some(1));
        let two = Graph::new(4, &[(0, 1, 2), (2, 3, 2)]).unwrap();
        assert_eq!(two.min_path_cost(0, 3), None);
    }

    #[test]
    fn weighted_k4_prefers_the_direct_heavy_edge() {
        // Going x1 -> x2 -> x3 would cost 2 * 5 = 10; direct is 5.
        let g = families::weighted_k4(2, 5);
        assert_eq!(g.min_path_cost(0, 2), Some(5));
        assert_eq!(g.min_path_cost(0, 1), Some(2));
        assert_eq!(g.min_path_cost(2, 3), Some(2));
        assert_eq!(g.min_path_cost(1, 3), Some(5));
    }

    #[test]
    fn metric_closure_of_a_path_is_a_weighted_triangle() {
        let closed = families::path(3).unwrap().metric_closure().unwrap();
        let got: Vec<_> = closed.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
        assert_eq!(got, vec![(0, 1, 2), (0, 2, 4), (1, 2, 2)]);
        assert_eq!(closed.metric_closure().unwrap(), closed);
    }

    #[test]
    fn metric_closure_requires_connectivity() {
        let g = Graph::new(3, &[(0, 1, 2)]).unwrap();
        assert!(g.metric_closure().is_err());
    }

    #[test]
    fn product_indexing_is_row_major() {
        let g = families::path(2).unwrap().cartesian_product(&families::path(3).unwrap());
        assert_eq!(g.n(), 6);
        assert_eq!(product_index(1, 2, 3), 5);
        assert_eq!(product_coords(5, 3), (1, 2));
        // (0,0)-(1,0) from the left factor, (0,0)-(0,1) from the right.
        let got: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(got, vec![(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]);
        assert!(!g.has_unit_edges());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::new(5, &[(0, 3, 2), (1, 2, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 2], vec![4]]);
        assert!(!g.is_connected());
        assert!(families::cycle(5).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_remaps_indices() {
        let c4 = families::cycle(4).unwrap();
        let (sub, map) = c4.induced(&[1, 2, 3]).unwrap();
        assert_eq!(sub.n(), 3);
        let got: Vec<_> = sub.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(got, vec![(0, 1), (1, 2)]);
        assert_eq!(map[0], None);
        assert_eq!(map[2], Some(1));
    }

    #[test]
    fn canonical_bytes_ignore_labels_and_input_order() {
        let a = Graph::new(3, &[(1, 0, 2), (2, 1, 2)]).unwrap();
        let b = Graph::new(3, &[(1, 2, 2), (0, 1, 2)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        assert_eq!(a.canonical_bytes(), b.canonical_bytes());
        assert_eq!(b.vertex_name(1), "b");
        assert_eq!(a.vertex_name(1), "v1");
    }
}
