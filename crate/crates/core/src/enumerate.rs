//! Enumeration of connected graphs up to isomorphism for small n.
//!
//! Representatives are generated by extending each connected class on n-1
//! vertices with a new vertex over every non-empty attachment set, then
//! deduplicating by a canonical form (the minimum upper-triangle bit string
//! over all n! vertex permutations). Every connected graph has a non-cut
//! vertex, so extension from connected (n-1)-classes is exhaustive.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maximum order supported by the built-in enumerator.
pub const MAX_ENUMERATION_N: usize = 7;

/// Canonical form of `g`: minimum upper-triangle bit string over all vertex
/// permutations, packed into a `u64` (valid for n <= 11).
///
/// The bits are taken in column order — for each position v in 1..n, the
/// edges to positions 0..v — so the string grows as positions are assigned
/// one at a time. That makes a depth-first search with prefix pruning
/// possible: once a partial assignment's prefix exceeds the best complete
/// string's prefix, no completion can be minimal.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    let total = n * (n - 1) / 2;
    debug_assert!(total <= 64);
    if n <= 1 {
        return 0;
    }

    struct Dfs<'a> {
        g: &'a Graph,
        n: usize,
        total: usize,
        assigned: Vec<usize>,
        used: Vec<bool>,
        best: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, prefix: u64, prefix_len: usize) {
            let depth = self.assigned.len();
            if depth == self.n {
                if prefix < self.best {
                    self.best = prefix;
                }
                return;
            }
            for w in 0..self.n {
                if self.used[w] {
                    continue;
                }
                let mut col = 0u64;
                for &a in &self.assigned {
                    col = col << 1 | u64::from(self.g.has_edge(a, w));
                }
                let next = prefix << depth | col;
                let len = prefix_len + depth;
                // Align the incumbent to the same prefix length.
                if next > self.best >> (self.total - len) {
                    continue;
                }
                self.used[w] = true;
                self.assigned.push(w);
                self.go(next, len);
                self.assigned.pop();
                self.used[w] = false;
            }
        }
    }

    let mut dfs = Dfs {
        g,
        n,
        total,
        assigned: Vec::with_capacity(n),
        used: vec![false; n],
        best: u64::MAX >> (64 - total),
    };
    dfs.go(0, 0);
    dfs.best
}

/// Brute-force isomorphism test for small graphs (used by tests as an oracle).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Exactly one representative per isomorphism class of connected simple
/// graphs on `n` vertices, for `1 <= n <= 7`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationUnsupported(n));
    }
    let mut classes = vec![Graph::empty(1)];
    for order in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &classes {
            for attach in 1u64..1 << (order - 1) {
                let mut g = Graph::empty(order);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                let mut m = attach;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    g.add_edge(order - 1, v);
                    m &= m - 1;
                }
                if seen.insert(canonical_form(&g)) {
                    next.push(g);
                }
            }
        }
        classes = next;
    }
    Ok(classes)
}
