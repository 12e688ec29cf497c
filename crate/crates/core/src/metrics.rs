//! BFS distances, power graphs and diameter.

use crate::graph::Graph;

/// Marker for unreachable vertex pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances computed by a BFS from every vertex.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    /// Distance between `u` and `v` ([`UNREACHABLE`] if no path exists).
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.n + v]
    }

    /// Largest finite distance (0 for a single vertex); `None` if the graph
    /// is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut max = 0;
        for &d in &self.entries {
            if d == UNREACHABLE {
                return None;
            }
            max = max.max(d);
        }
        Some(max)
    }
}

/// Compute the distance matrix of `g` by BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut entries = vec![UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut entries[s * n..(s + 1) * n];
        row[s] = 0;
        let mut seen: u64 = 1 << s;
        let mut frontier: u64 = 1 << s;
        let mut depth = 0u32;
        while frontier != 0 {
            depth += 1;
            let mut next: u64 = 0;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                next |= g.neighbors(v);
                m &= m - 1;
            }
            frontier = next & !seen;
            seen |= next;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                row[v] = depth;
                m &= m - 1;
            }
        }
    }
    DistanceMatrix { n, entries }
}

/// The `k`-th power graph: same vertices, edges between distinct vertices at
/// distance at most `k`.
pub fn power_graph(g: &Graph, k: u32) -> Graph {
    assert!(k >= 1, "power graph requires k >= 1");
    let dist = distance_matrix(g);
    let n = g.n();
    let mut h = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let d = dist.get(u, v);
            if d != UNREACHABLE && d <= k {
                h.add_edge(u, v);
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let d = distance_matrix(&Graph::path(3));
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 0), 0);
        assert_eq!(d.diameter(), Some(2));
    }

    #[test]
    fn complete_distances() {
        let d = distance_matrix(&Graph::complete(6));
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn disconnected_marker() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let d = distance_matrix(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn power_identity_and_p4() {
        let g = Graph::path(4);
        assert_eq!(power_graph(&g, 1), g);
        let p2 = power_graph(&g, 2);
        assert_eq!(p2.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn distance_one_iff_adjacent() {
        let g = Graph::cycle(7);
        let d = distance_matrix(&g);
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
            }
        }
    }
}
