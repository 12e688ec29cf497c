//! One-off generator for data/connected8.g6: one graph6 line per isomorphism
//! class of connected graphs on 8 vertices (11117 classes). Each class is
//! obtained by attaching an 8th vertex to a connected 7-vertex class over
//! every non-empty neighborhood, then deduplicating by canonical form.

use std::collections::HashSet;

use spectral_chroma::enumerate::{canonical_form, enumerate_connected_graphs};
use spectral_chroma::graph::Graph;
use spectral_chroma::graph6::write_graph6;

fn main() {
    let t0 = std::time::Instant::now();
    let base = enumerate_connected_graphs(7).unwrap();
    let mut seen = HashSet::new();
    let mut lines = Vec::new();
    for b in &base {
        for attach in 1u64..1 << 7 {
            let mut g = Graph::empty(8);
            for (u, v) in b.edges() {
                g.add_edge(u, v);
            }
            let mut m = attach;
            while m != 0 {
                g.add_edge(7, m.trailing_zeros() as usize);
                m &= m - 1;
            }
            if seen.insert(canonical_form(&g)) {
                lines.push(write_graph6(&g).unwrap());
            }
        }
    }
    lines.sort();
    println!("classes: {} in {:?}", lines.len(), t0.elapsed());
    let path = std::env::args().nth(1).unwrap_or_else(|| "data/connected8.g6".into());
    let mut out = String::from("# connected graphs on 8 vertices, one per isomorphism class\n");
    out.push_str(&lines.join("\n"));
    out.push('\n');
    std::fs::write(&path, out).unwrap();
    println!("wrote {path}");
}
