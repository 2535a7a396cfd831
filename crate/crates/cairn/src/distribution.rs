//! Pebble distributions and their algebra: scaling, containment, products,
//! the named target families, and exhaustive enumeration.
//!
//! A distribution assigns a nonnegative pebble count to each vertex of a
//! specific graph. The library never ties a distribution to its graph by
//! reference; agreement is checked by length where it matters.

use crate::error::{Error, Result};
use crate::graph::{product_index, Graph, VertexId};

/// Pebble counts per vertex, with the total cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Distribution {
    counts: Vec<u64>,
    size: u64,
}

impl Distribution {
    pub fn new(counts: Vec<u64>) -> Distribution {
        let size = counts.iter().sum();
        Distribution { counts, size }
    }

    pub fn zero(n: usize) -> Distribution {
        Distribution {
            counts: vec![0; n],
            size: 0,
        }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, v: VertexId) -> u64 {
        self.counts[v]
    }

    /// Total number of pebbles.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of vertices this distribution is shaped for.
    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn is_zero(&self) -> bool {
        self.size == 0
    }

    pub fn support(&self) -> Vec<VertexId> {
        (0..self.counts.len()).filter(|&v| self.counts[v] > 0).collect()
    }

    /// Pointwise multiple `t * self`; `t = 0` gives the zero distribution.
    pub fn scale(&self, t: u64) -> Distribution {
        Distribution::new(self.counts.iter().map(|&c| c * t).collect())
    }

    /// True iff `other` fits under `self` pointwise. Errors when the two are
    /// shaped for different vertex sets.
    pub fn contains(&self, other: &Distribution) -> Result<bool> {
        if self.counts.len() != other.counts.len() {
            return Err(Error::InvalidDistribution(format!(
                "containment across different vertex sets ({} vs {})",
                self.counts.len(),
                other.counts.len()
            )));
        }
        Ok(self.ge(other))
    }

    /// Unchecked pointwise `>=`; callers guarantee matching shape.
    pub(crate) fn ge(&self, other: &Distribution) -> bool {
        debug_assert_eq!(self.counts.len(), other.counts.len());
        if self.size < other.size {
            return false;
        }
        self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    /// Product distribution on the cartesian product graph, `self` on the
    /// left factor: count at `(x, y)` is `self(x) * other(y)`.
    pub fn product(&self, other: &Distribution) -> Distribution {
        let hn = other.counts.len();
        let mut counts = vec![0; self.counts.len() * hn];
        for (x, &cx) in self.counts.iter().enumerate() {
            if cx == 0 {
                continue;
            }
            for (y, &cy) in other.counts.iter().enumerate() {
                counts[product_index(x, y, hn)] = cx * cy;
            }
        }
        Distribution::new(counts)
    }

    /// Stable byte form for fingerprints and cache keys.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut s = String::from("d");
        for c in &self.counts {
            s.push_str(&format!("{c},"));
        }
        s.push(';');
        s.into_bytes()
    }
}

impl serde::Serialize for Distribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Distribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<u64>::deserialize(d).map(Distribution::new)
    }
}

/// Finite explicit list of distributions over one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionSet {
    members: Vec<Distribution>,
}

impl DistributionSet {
    /// Builds a set; rejects the empty list and mixed vertex counts.
    pub fn new(members: Vec<Distribution>) -> Result<DistributionSet> {
        let Some(first) = members.first() else {
            return Err(Error::InvalidDistribution(
                "distribution set must be nonempty".into(),
            ));
        };
        let n = first.n();
        if members.iter().any(|d| d.n() != n) {
            return Err(Error::InvalidDistribution(
                "distribution set members disagree on vertex count".into(),
            ));
        }
        Ok(DistributionSet { members })
    }

    pub fn singleton(d: Distribution) -> DistributionSet {
        DistributionSet { members: vec![d] }
    }

    pub fn members(&self) -> &[Distribution] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn n(&self) -> usize {
        self.members[0].n()
    }

    /// All pairwise products, `self` on the left factor, duplicates removed
    /// keeping first occurrence.
    pub fn set_product(&self, other: &DistributionSet) -> DistributionSet {
        let mut members: Vec<Distribution> = Vec::new();
        for dg in &self.members {
            for dh in &other.members {
                let p = dg.product(dh);
                if !members.contains(&p) {
                    members.push(p);
                }
            }
        }
        DistributionSet { members }
    }

    /// Stable byte form: member byte forms sorted, so logically equal sets
    /// fingerprint identically regardless of member order.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = self.members.iter().map(|d| d.canonical_bytes()).collect();
        parts.sort();
        parts.dedup();
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(&p);
        }
        out
    }
}

/// One pebble on `v`.
pub fn delta(g: &Graph, v: VertexId) -> Result<Distribution> {
    if v >= g.n() {
        return Err(Error::InvalidDistribution(format!(
            "vertex {v} out of range for n={}",
            g.n()
        )));
    }
    let mut counts = vec![0; g.n()];
    counts[v] = 1;
    Ok(Distribution::new(counts))
}

/// One pebble on every vertex: the cover target.
pub fn gamma_target(g: &Graph) -> Distribution {
    Distribution::new(vec![1; g.n()])
}

/// `t` pebbles on a single vertex, one member per vertex.
pub fn s_t(g: &Graph, t: u64) -> Result<DistributionSet> {
    if t == 0 {
        return Err(Error::InvalidDistribution("t must be >= 1".into()));
    }
    DistributionSet::new(
        (0..g.n())
            .map(|v| delta(g, v).map(|d| d.scale(t)))
            .collect::<Result<_>>()?,
    )
}

/// `t` pebbles on either endpoint of a path: two members (one on a
/// single-vertex path). Rejects graphs that are not paths in vertex order.
pub fn d_t(g: &Graph, t: u64) -> Result<DistributionSet> {
    if t == 0 {
        return Err(Error::InvalidDistribution("t must be >= 1".into()));
    }
    let n = g.n();
    let is_path = g.edges().len() == n - 1
        && g.edges().iter().enumerate().all(|(i, e)| (e.u, e.v) == (i, i + 1));
    if !is_path {
        return Err(Error::InvalidDistribution(
            "endpoint targets are defined on path graphs only".into(),
        ));
    }
    let first = delta(g, 0)?.scale(t);
    let last = delta(g, n - 1)?.scale(t);
    let members = if n == 1 { vec![first] } else { vec![first, last] };
    DistributionSet::new(members)
}

/// One member per neighbor `u` of `v`: enough pebbles on `u` to pay for the
/// hop to `v` (weight of the edge; 2 on unweighted graphs). Rejects
/// isolated `v`, which would leave the set empty.
pub fn n2(g: &Graph, v: VertexId) -> Result<DistributionSet> {
    if v >= g.n() {
        return Err(Error::InvalidDistribution(format!(
            "vertex {v} out of range for n={}",
            g.n()
        )));
    }
    if g.degree(v) == 0 {
        return Err(Error::InvalidDistribution(format!(
            "vertex {v} has no neighbors"
        )));
    }
    DistributionSet::new(
        g.neighbors(v)
            .iter()
            .map(|&(u, w)| delta(g, u).map(|d| d.scale(w)))
            .collect::<Result<_>>()?,
    )
}

/// Iterator over every distribution of a fixed size, largest-first
/// lexicographic in the count vector. The order is part of the public
/// contract: witnesses and cache entries depend on it.
pub struct Compositions {
    next: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Distribution;

    fn next(&mut self) -> Option<Distribution> {
        let cur = self.next.take()?;
        let out = Distribution::new(cur.clone());
        self.next = successor(cur);
        Some(out)
    }
}

fn successor(mut c: Vec<u64>) -> Option<Vec<u64>> {
    if advance_composition(&mut c) {
        Some(c)
    } else {
        None
    }
}

/// Steps `c` to the next composition in place; false once the order is
/// exhausted (all pebbles on the last vertex). Allocation-free form used by
/// the layer sweeps, which visit hundreds of millions of states.
pub(crate) fn advance_composition(c: &mut [u64]) -> bool {
    let last = c.len() - 1;
    let tail = c[last];
    c[last] = 0;
    let Some(j) = (0..last).rev().find(|&j| c[j] > 0) else {
        c[last] = tail;
        return false;
    };
    c[j] -= 1;
    c[j + 1] = tail + 1;
    true
}

/// Every distribution of exactly `size` pebbles on `g`, each exactly once.
pub fn enumerate_distributions(g: &Graph, size: u64) -> Compositions {
    let mut first = vec![0; g.n()];
    first[0] = size;
    Compositions { next: Some(first) }
}

/// Number of distributions of `size` pebbles on `n` vertices:
/// C(size + n - 1, n - 1). Errors if it exceeds u128.
pub fn count_distributions(n: usize, size: u64) -> Result<u128> {
    binomial(size + n as u64 - 1, n as u64 - 1)
}

pub(crate) fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::Unsupported(format!("binomial C({n},{k}) exceeds u128")))?;
        acc /= (i + 1) as u128;
    }
    Ok(acc)
}

/// The extremal start on the `n`-vertex path from which `2^i` pebbles reach
/// neither endpoint: middle-vertex pile for odd `n`, a symmetric two-vertex
/// split for even `n`. Its size is one less than the matching cycle value.
pub fn critical_path_distribution(n: usize, i: u32) -> Result<Distribution> {
    if n < 2 {
        return Err(Error::InvalidInput("path must have n >= 2".into()));
    }
    let k = n / 2;
    let mut counts = vec![0u64; n];
    let exp_ok = (k as u32 + i) < 63;
    if !exp_ok {
        return Err(Error::Unsupported("pebble counts exceed u64".into()));
    }
    if n % 2 == 1 {
        // Odd n = 2k+1: 2^(k+i) - 1 pebbles on the middle vertex.
        counts[k] = (1u64 << (k as u32 + i)) - 1;
    } else if (k as u32 + i) % 2 == 0 {
        // Even n = 2k, k+i = 2m: (2^(2m) - 1)/3 on each middle vertex.
        let m = (k as u32 + i) / 2;
        let each = ((1u64 << (2 * m)) - 1) / 3;
        counts[k - 1] = each;
        counts[k] = each;
    } else {
        // Even n = 2k, k+i = 2m+1: (2^(2m+1) - 2)/3 on each middle vertex.
        let m = (k as u32 + i - 1) / 2;
        let each = ((1u64 << (2 * m + 1)) - 2) / 3;
        counts[k - 1] = each;
        counts[k] = each;
    }
    Ok(Distribution::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn delta_scale_contains_basics() {
        let p3 = families::path(3).unwrap();
        let d = delta(&p3, 1).unwrap();
        assert_eq!(d.counts(), &[0, 1, 0]);
        assert_eq!(d.scale(3).counts(), &[0, 3, 0]);
        assert_eq!(d.scale(3).size(), 3);
        assert!(d.scale(0).is_zero());
        assert!(d.contains(&d).unwrap());
        assert!(delta(&p3, 3).is_err());

        let a = Distribution::new(vec![2, 0]);
        let b = Distribution::new(vec![1, 1]);
        assert!(!a.contains(&b).unwrap());
        assert!(a.contains(&Distribution::zero(2)).unwrap());
        assert!(a.contains(&Distribution::new(vec![0, 0, 0])).is_err());
    }

    #[test]
    fn the_two_pile_k4_start_does_not_contain_the_cover_target() {
        let k4 = families::weighted_k4(2, 5);
        let start = Distribution::new(vec![9, 4, 0, 0]);
        assert!(!start.contains(&gamma_target(&k4)).unwrap());
    }

    #[test]
    fn products_multiply_counts_and_sizes() {
        let p2 = families::path(2).unwrap();
        let p3 = families::path(3).unwrap();
        let dx = delta(&p2, 1).unwrap();
        let dy = delta(&p3, 2).unwrap();
        // (x, y) = (1, 2) lands at index 1*3 + 2 = 5.
        assert_eq!(dx.product(&dy).counts(), &[0, 0, 0, 0, 0, 1]);
        assert_eq!(
            dx.scale(3).product(&dy.scale(2)).counts(),
            &[0, 0, 0, 0, 0, 6]
        );
        let g = gamma_target(&p2).product(&gamma_target(&p3));
        assert_eq!(g, gamma_target(&p2.cartesian_product(&p3)));
        let a = Distribution::new(vec![1, 2]);
        let b = Distribution::new(vec![3, 0, 4]);
        assert_eq!(a.product(&b).size(), a.size() * b.size());
    }

    #[test]
    fn singleton_set_product_is_pointwise() {
        let p2 = families::path(2).unwrap();
        let p3 = families::path(3).unwrap();
        let sp = s_t(&p2, 1).unwrap().set_product(&s_t(&p3, 1).unwrap());
        let product = p2.cartesian_product(&p3);
        assert_eq!(sp, s_t(&product, 1).unwrap());
        assert!(sp.len() <= 2 * 3);
    }

    #[test]
    fn trivial_factor_set_product_doubles_endpoint_targets() {
        // {2 delta_v} on the one-vertex graph times the endpoint singles of
        // a path gives the endpoint doubles of that path.
        let t = families::trivial();
        let p6 = families::path(6).unwrap();
        let two = DistributionSet::singleton(delta(&t, 0).unwrap().scale(2));
        let got = two.set_product(&d_t(&p6, 1).unwrap());
        assert_eq!(got, d_t(&p6, 2).unwrap());
    }

    #[test]
    fn named_target_families() {
        let k4 = families::complete(4).unwrap();
        assert_eq!(gamma_target(&k4).counts(), &[1, 1, 1, 1]);

        let p4 = families::path(4).unwrap();
        let d2 = d_t(&p4, 2).unwrap();
        assert_eq!(d2.members()[0].counts(), &[2, 0, 0, 0]);
        assert_eq!(d2.members()[1].counts(), &[0, 0, 0, 2]);
        assert!(d_t(&families::cycle(3).unwrap(), 1).is_err());
        assert_eq!(d_t(&families::trivial(), 3).unwrap().len(), 1);

        let p3 = families::path(3).unwrap();
        let n = n2(&p3, 0).unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n.members()[0].counts(), &[0, 2, 0]);
        assert!(n2(&families::trivial(), 0).is_err());
        // The hop cost follows the edge weight on weighted graphs.
        let wk4 = families::weighted_k4(2, 5);
        let nv0 = n2(&wk4, 0).unwrap();
        assert_eq!(nv0.members()[0].counts(), &[0, 2, 0, 0]);
        assert_eq!(nv0.members()[1].counts(), &[0, 0, 5, 0]);

        assert_eq!(s_t(&p3, 2).unwrap().len(), 3);
        assert!(s_t(&p3, 0).is_err());
    }

    #[test]
    fn enumeration_is_largest_first_lexicographic_and_complete() {
        let p2 = families::path(2).unwrap();
        let got: Vec<_> = enumerate_distributions(&p2, 2)
            .map(|d| d.counts().to_vec())
            .collect();
        assert_eq!(got, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);

        let p3 = families::path(3).unwrap();
        let zero: Vec<_> = enumerate_distributions(&p3, 0).collect();
        assert_eq!(zero, vec![Distribution::zero(3)]);

        assert_eq!(count_distributions(6, 11).unwrap(), 4368);
        for n in 1..=4usize {
            let g = families::complete(n).unwrap();
            for size in 0..=6u64 {
                let all: Vec<_> = enumerate_distributions(&g, size).collect();
                assert_eq!(all.len() as u128, count_distributions(n, size).unwrap());
                let mut uniq = all.clone();
                uniq.sort_by(|a, b| a.counts().cmp(b.counts()));
                uniq.dedup();
                assert_eq!(uniq.len(), all.len());
                assert!(all.iter().all(|d| d.size() == size));
            }
        }
    }

    #[test]
    fn distribution_set_validation() {
        assert!(DistributionSet::new(vec![]).is_err());
        assert!(DistributionSet::new(vec![
            Distribution::zero(2),
            Distribution::zero(3)
        ])
        .is_err());
        let s = DistributionSet::new(vec![Distribution::zero(2), Distribution::zero(2)]);
        assert_eq!(s.unwrap().len(), 2);
    }

    #[test]
    fn extremal_path_starts_match_the_closed_forms() {
        assert_eq!(
            critical_path_distribution(3, 0).unwrap().counts(),
            &[0, 1, 0]
        );
        assert_eq!(
            critical_path_distribution(4, 0).unwrap().counts(),
            &[0, 1, 1, 0]
        );
        assert_eq!(
            critical_path_distribution(6, 1).unwrap().counts(),
            &[0, 0, 5, 5, 0, 0]
        );
        assert_eq!(
            critical_path_distribution(5, 1).unwrap().counts(),
            &[0, 0, 7, 0, 0]
        );
        assert_eq!(critical_path_distribution(2, 1).unwrap().counts(), &[1, 1]);
        assert_eq!(critical_path_distribution(2, 2).unwrap().counts(), &[2, 2]);
        assert!(critical_path_distribution(1, 0).is_err());
    }

    #[test]
    fn set_canonical_bytes_are_order_insensitive() {
        let p2 = families::path(2).unwrap();
        let a = DistributionSet::new(vec![
            delta(&p2, 0).unwrap(),
            delta(&p2, 1).unwrap(),
        ])
        .unwrap();
        let b = DistributionSet::new(vec![
            delta(&p2, 1).unwrap(),
            delta(&p2, 0).unwrap(),
        ])
        .unwrap();
        assert_eq!(a.canonical_bytes(), b.canonical_bytes());
    }
}
