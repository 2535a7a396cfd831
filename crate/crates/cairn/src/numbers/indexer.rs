//! Counting and ranking of fixed-size distributions in the largest-first
//! lexicographic order the enumerator uses. Ranks let the engines address a
//! whole layer (all distributions of one size) as a flat array, and make
//! witnesses from different engines land on the same state.

pub(crate) struct Indexer {
    n: usize,
    /// Pascal's triangle: binom[a][b] = C(a, b), b <= n.
    binom: Vec<Vec<u128>>,
}

impl Indexer {
    /// Supports sizes up to `max_total` on `n` vertices.
    pub fn new(n: usize, max_total: u64) -> Indexer {
        let rows = max_total as usize + n + 1;
        let cols = n + 1;
        let mut binom = vec![vec![0u128; cols]; rows];
        for a in 0..rows {
            binom[a][0] = 1;
            for b in 1..cols {
                binom[a][b] = if b > a {
                    0
                } else {
                    binom[a - 1][b - 1] + binom[a - 1][b]
                };
            }
        }
        Indexer { n, binom }
    }

    /// C(a, b) within the precomputed range.
    pub fn binom(&self, a: u64, b: usize) -> u128 {
        self.binom[a as usize][b]
    }

    /// Number of distributions of size `k` on n vertices: C(k + n - 1, n - 1).
    pub fn layer_count(&self, k: u64) -> u128 {
        self.binom(k + self.n as u64 - 1, self.n - 1)
    }

    /// Position of `counts` (summing to `k`) in the largest-first
    /// lexicographic enumeration of its layer.
    pub fn rank(&self, counts: &[u64], k: u64) -> u128 {
        debug_assert_eq!(counts.len(), self.n);
        let mut rank: u128 = 0;
        let mut remaining = k;
        for i in 0..self.n - 1 {
            let c = counts[i];
            if remaining > c {
                // Everything placing a larger count at position i precedes us.
                let free = self.n - 1 - i;
                rank += self.binom(remaining - c - 1 + free as u64, free);
            }
            remaining -= c;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn ranks_follow_enumeration_order() {
        // Rank of the i-th enumerated distribution must be i, for every
        // layer small enough to walk directly.
        for n in 1..=4usize {
            let g = Graph::new(n, &[]).unwrap();
            let ix = Indexer::new(n, 8);
            for k in 0..=6u64 {
                let layer: Vec<_> =
                    crate::distribution::enumerate_distributions(&g, k).collect();
                assert_eq!(layer.len() as u128, ix.layer_count(k));
                for (i, d) in layer.iter().enumerate() {
                    assert_eq!(ix.rank(d.counts(), k), i as u128, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn layer_counts_match_binomials() {
        let ix = Indexer::new(6, 12);
        assert_eq!(ix.layer_count(0), 1);
        assert_eq!(ix.layer_count(11), 4368);
    }
}
