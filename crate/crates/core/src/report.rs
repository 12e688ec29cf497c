//! Experiment drivers and machine-readable records: the Table 1 catalog run,
//! the Table 2 sharpness census, and the Figure 2 random-graph sweep, each
//! with its embedded expected values so reproduction failures are loud.

use serde::{Deserialize, Serialize};

use crate::bounds::{ceil_slack, classic_kappa_bound, hoffman_bound, kappa_of};
use crate::catalog::named_graph;
use crate::color::{distance_k_chromatic, DEFAULT_BUDGET};
use crate::error::Result;
use crate::graph::Graph;
use crate::optimize::{optimize_hoffman_type, optimize_unified_kappa, optimize_vector_r};
use crate::random::{erdos_renyi, SplitMix64};
use crate::spectra::eigendecompose;

/// One row of a bounds-vs-exact experiment.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExperimentRecord {
    pub graph_id: String,
    pub n: usize,
    pub edges: usize,
    /// ⌈optimized Hoffman-type bound⌉.
    pub hoffman_type: usize,
    /// ⌈optimized Theorem 5.4 vector bound⌉.
    pub vector_r: usize,
    /// Optimized unified κ bound (κ + 1).
    pub unified_kappa: usize,
    /// Exact χ_k, or None when the coloring budget was exceeded.
    pub chi_k: Option<usize>,
    /// Whether the κ or vector bound improved on the Hoffman-type column.
    pub improved: bool,
    /// Wall-clock milliseconds per stage.
    pub timings_ms: Timings,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct Timings {
    pub spectrum: u64,
    pub hoffman_type: u64,
    pub vector_r: u64,
    pub unified_kappa: u64,
    pub chi_k: u64,
}

/// Expected Table 1 columns: (⌈Hoffman-type⌉, ⌈Theorem 5.4⌉, unified κ
/// bound, χ_2) for every catalog graph in the table.
pub const EXPECTED_TABLE1: &[(&str, [usize; 4])] = &[
    ("bidiakis_cube", [4, 4, 5, 6]),
    ("blanusa_first_snark", [4, 4, 5, 6]),
    ("blanusa_second_snark", [5, 5, 5, 6]),
    ("bull", [3, 4, 3, 4]),
    ("butterfly", [3, 4, 3, 5]),
    ("chvatal", [5, 5, 10, 12]),
    ("claw", [2, 3, 2, 4]),
    ("clebsch", [16, 16, 16, 16]),
    ("dart", [3, 4, 3, 5]),
    ("desargues", [4, 4, 4, 6]),
    ("diamond", [4, 4, 4, 4]),
    ("dodecahedral", [5, 5, 5, 5]),
    ("durer", [5, 5, 5, 6]),
    ("errera", [6, 7, 7, 9]),
    ("flower_snark", [4, 4, 5, 6]),
    ("folkman", [7, 7, 7, 10]),
    ("fork", [3, 3, 3, 4]),
    ("franklin", [4, 4, 4, 6]),
    ("frucht", [4, 4, 5, 6]),
    ("gem", [4, 4, 4, 5]),
    ("goldner_harary", [6, 7, 6, 11]),
    ("golomb", [4, 5, 4, 7]),
    ("grotzsch", [5, 6, 5, 11]),
    ("heawood", [7, 7, 7, 7]),
    ("herschel", [4, 5, 4, 6]),
    ("hexahedral", [4, 4, 4, 4]),
    ("hoffman", [6, 6, 6, 8]),
    ("house", [4, 4, 4, 5]),
    ("house_x", [4, 5, 4, 5]),
    ("icosahedral", [6, 6, 6, 6]),
    ("krackhardt_kite", [5, 6, 5, 8]),
    ("moebius_kantor", [4, 4, 4, 4]),
    ("moser_spindle", [4, 5, 4, 7]),
    ("octahedral", [6, 6, 6, 6]),
    ("pappus", [5, 5, 5, 6]),
    ("petersen", [10, 10, 10, 10]),
    ("poussin", [6, 7, 6, 9]),
    ("robertson", [7, 7, 8, 9]),
    ("shrikhande", [16, 16, 16, 16]),
    ("sousselier", [4, 6, 4, 8]),
    ("thomsen", [6, 6, 6, 6]),
    ("tietze", [4, 4, 4, 7]),
    ("truncated_tetrahedral", [4, 4, 4, 4]),
    ("wagner", [4, 4, 8, 8]),
];

/// Expected Table 2 rows, n → (Hoffman-sharp, κ-sharp, connected total).
pub const EXPECTED_TABLE2: &[(usize, [usize; 3])] = &[
    (3, [2, 2, 2]),
    (4, [4, 6, 6]),
    (5, [6, 21, 21]),
    (6, [20, 111, 112]),
    (7, [45, 780, 853]),
    (8, [184, 8630, 11117]),
];

/// Published Figure 2 proportions (strict κ-over-Hoffman-type
/// out-performance on G(n, 1/2)), n = 5..20.
pub const FIGURE2_REFERENCE: &[(usize, f64)] = &[
    (5, 0.028),
    (6, 0.044),
    (7, 0.058),
    (8, 0.077),
    (9, 0.110),
    (10, 0.119),
    (11, 0.139),
    (12, 0.179),
    (13, 0.197),
    (14, 0.218),
    (15, 0.245),
    (16, 0.266),
    (17, 0.287),
    (18, 0.308),
    (19, 0.328),
    (20, 0.365),
];

fn now_ms(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Compute one full experiment row (all three optimized bounds plus exact
/// χ_k) for an arbitrary connected graph.
pub fn experiment_record(graph_id: &str, g: &Graph, k: usize) -> Result<ExperimentRecord> {
    let mut timings = Timings::default();
    let t0 = std::time::Instant::now();
    let spec = eigendecompose(g, 1e-8)?;
    timings.spectrum = now_ms(t0);

    let t0 = std::time::Instant::now();
    let ht = optimize_hoffman_type(g, &spec, k)?;
    timings.hoffman_type = now_ms(t0);

    let t0 = std::time::Instant::now();
    let vr = optimize_vector_r(g, &spec, k)?;
    timings.vector_r = now_ms(t0);

    let t0 = std::time::Instant::now();
    let uk = optimize_unified_kappa(g, &spec, k)?;
    timings.unified_kappa = now_ms(t0);

    let t0 = std::time::Instant::now();
    let chi = match distance_k_chromatic(g, k as u32, DEFAULT_BUDGET) {
        Ok(res) => Some(res.chromatic_number),
        Err(crate::error::Error::ColoringBudget { .. }) => None,
        Err(e) => return Err(e),
    };
    timings.chi_k = now_ms(t0);

    let improved =
        vr.lower_bound > ht.lower_bound || uk.lower_bound > ht.lower_bound;
    Ok(ExperimentRecord {
        graph_id: graph_id.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        hoffman_type: ht.lower_bound,
        vector_r: vr.lower_bound,
        unified_kappa: uk.lower_bound,
        chi_k: chi,
        improved,
        timings_ms: timings,
    })
}

/// Compute all Table 1 rows (k = 2) in catalog order.
pub fn table1_records() -> Result<Vec<ExperimentRecord>> {
    let names: Vec<&str> = EXPECTED_TABLE1.iter().map(|(n, _)| *n).collect();
    let results = crate::parallel::par_map(names, |name| {
        let g = named_graph(name)?;
        experiment_record(name, &g, 2)
    });
    results.into_iter().collect()
}

/// Compare records against the embedded expected table; returns mismatch
/// descriptions (empty = exact reproduction).
pub fn table1_mismatches(records: &[ExperimentRecord]) -> Vec<String> {
    let mut out = Vec::new();
    for (name, expect) in EXPECTED_TABLE1 {
        let Some(r) = records.iter().find(|r| r.graph_id == *name) else {
            out.push(format!("{name}: missing row"));
            continue;
        };
        let got = [r.hoffman_type, r.vector_r, r.unified_kappa, r.chi_k.unwrap_or(0)];
        for (col, (g, e)) in got.iter().zip(expect).enumerate() {
            if g != e {
                let col_name = ["hoffman_type", "vector_r", "unified_kappa", "chi_2"][col];
                out.push(format!("{name}: {col_name} = {g}, expected {e}"));
            }
        }
    }
    out
}

/// Sharpness census for one order n: (Hoffman-sharp, κ-sharp, total), both
/// bounds at k = 1 against exact χ.
pub fn table2_counts(graphs: &[Graph]) -> Result<[usize; 3]> {
    let rows = crate::parallel::par_map(graphs.to_vec(), |g| -> Result<(bool, bool)> {
        let spec = eigendecompose(&g, 1e-8)?;
        let chi = crate::color::exact_chromatic_number(&g, DEFAULT_BUDGET)?.chromatic_number;
        // Hoffman sharpness is equality of the raw value 1 - lambda_1/lambda_n
        // with chi (not of its ceiling): the published per-order counts only
        // reproduce under raw equality.
        let hoffman_sharp = g.edge_count() > 0
            && hoffman_bound(&spec)
                .map(|r| (r.raw - chi as f64).abs() <= 1e-6)
                .unwrap_or(false);
        let kappa_sharp = classic_kappa_bound(&g, &spec)?.lower_bound == chi;
        Ok((hoffman_sharp, kappa_sharp))
    });
    let mut counts = [0usize; 3];
    counts[2] = graphs.len();
    for row in rows {
        let (h, k) = row?;
        counts[0] += usize::from(h);
        counts[1] += usize::from(k);
    }
    Ok(counts)
}

/// One Figure 2 data point: the proportion of connected G(n, 1/2) samples on
/// which the unified κ bound, evaluated on the optimized Hoffman-type
/// witness p_2 (the paper's reduced-cost mode), strictly exceeds
/// ⌈Hoffman-type⌉. Disconnected samples are resampled.
pub fn figure2_proportion(n: usize, samples: usize, seed: u64) -> Result<f64> {
    assert!(samples >= 1, "need at least one sample");
    let mut rng = SplitMix64::new(seed);
    let seeds: Vec<u64> = (0..samples)
        .map(|_| {
            // Burn seeds until the derived graph is connected so every
            // worker resamples deterministically.
            loop {
                let s = rng.next_u64();
                if erdos_renyi(n, 0.5, s).is_connected() {
                    break s;
                }
            }
        })
        .collect();
    let hits = crate::parallel::par_map(seeds, |s| -> Result<bool> {
        let g = erdos_renyi(n, 0.5, s);
        let spec = eigendecompose(&g, 1e-8)?;
        let ht = optimize_hoffman_type(&g, &spec, 2)?;
        let ht_ceil = ceil_slack(ht.raw);
        // κ evaluated on the same witness p_2, not its own optimum.
        let strict = match kappa_of(&ht.witness, &g, &spec) {
            Ok(kappa) => kappa + 1 > ht_ceil,
            // Witness numerically outside the κ hypothesis: no improvement.
            Err(_) => false,
        };
        Ok(strict)
    });
    let mut count = 0usize;
    for h in hits {
        count += usize::from(h?);
    }
    Ok(count as f64 / samples as f64)
}

/// CSV serialization (header + one line per record, LF endings).
pub fn records_to_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(
        "graph_id,n,edges,hoffman_type,vector_r,unified_kappa,chi_k,improved\n",
    );
    for r in records {
        let chi = r.chi_k.map_or_else(|| "budget-exceeded".into(), |c| c.to_string());
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.graph_id, r.n, r.edges, r.hoffman_type, r.vector_r, r.unified_kappa, chi, r.improved
        ));
    }
    out
}

/// JSON serialization: an array of record objects with snake_case keys.
pub fn records_to_json(records: &[ExperimentRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// Parse records back from JSON (round-trip support for tests/tools).
pub fn records_from_json(text: &str) -> Result<Vec<ExperimentRecord>> {
    serde_json::from_str(text)
        .map_err(|e| crate::error::Error::InvalidArgument(format!("bad records JSON: {e}")))
}
