//! Compares the data-parallel experiment driver against the sequential
//! fallback on a fixed slice of the catalog.
//!
//! Run both sides with:
//!   cargo bench --bench parallel_vs_sequential
//!   cargo bench --bench parallel_vs_sequential --no-default-features
//! The compiled feature set decides which code path `par_map` takes; the
//! benchmark name records it so the two runs are comparable in the report.

use criterion::{criterion_group, criterion_main, Criterion};
use spectral_chroma::{eigendecompose, named_graph, optimize_hoffman_type, optimize_vector_r};

const GRAPHS: &[&str] = &["bull", "claw", "house", "diamond", "gem", "fork", "butterfly", "dart"];

fn bound_sweep() -> usize {
    let results = spectral_chroma::parallel::par_map(GRAPHS.to_vec(), |name| {
        let g = named_graph(name).unwrap();
        let spec = eigendecompose(&g, 1e-8).unwrap();
        let ht = optimize_hoffman_type(&g, &spec, 2).unwrap();
        let vr = optimize_vector_r(&g, &spec, 2).unwrap();
        ht.lower_bound + vr.lower_bound
    });
    results.into_iter().sum()
}

fn benches(c: &mut Criterion) {
    let mode = if cfg!(feature = "parallel") { "parallel" } else { "sequential" };
    c.bench_function(&format!("catalog_bound_sweep_{mode}"), |b| {
        b.iter(bound_sweep)
    });
}

criterion_group!(bench_group, benches);
criterion_main!(bench_group);
