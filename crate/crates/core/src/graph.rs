//! Simple undirected graphs on up to 64 vertices, stored as per-vertex
//! adjacency bitmasks.

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are indexed `0..n` contiguously; there
/// are no self-loops and the adjacency relation is symmetric by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// An edgeless graph on `n` vertices (`1 <= n <= 64`).
    pub fn empty(n: usize) -> Self {
        assert!((1..=64).contains(&n), "graph order must be in 1..=64, got {n}");
        Graph { n, rows: vec![0; n] }
    }

    /// Build a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Insert the undirected edge `(u, v)`; self-loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u}, {v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    /// Whether `(u, v)` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.rows[u] >> (u + 1).min(63) << (u + 1).min(63);
            if u + 1 >= 64 {
                m = 0;
            }
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                next |= self.rows[v];
                m &= m - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        seen == all
    }

    /// Dense adjacency matrix (row-major) as `f64`, for the spectral layer.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in 0..n {
                if self.has_edge(u, v) {
                    a[u * n + v] = 1.0;
                }
            }
        }
        a
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path `P_n` with edges `(i, i+1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{n,n}` minus one edge (the specific edge is irrelevant up to
    /// isomorphism); requires `n >= 2`.
    pub fn complete_bipartite_minus_edge(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "complete_bipartite_minus_edge requires n >= 2, got {n}"
            )));
        }
        let mut g = Graph::complete_bipartite(n, n);
        g.remove_edge(0, n);
        Ok(g)
    }

    /// Remove the undirected edge `(u, v)` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
