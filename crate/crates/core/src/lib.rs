//! Eigenvalue lower bounds on distance-k chromatic, quantum and vector
//! chromatic numbers: graph plumbing, a dense symmetric eigensolver, a
//! self-contained LP/BILP engine, the closed-form bound evaluators, the
//! witness-polynomial optimizers, exact coloring ground truth, and the
//! experiment drivers reproducing the published tables and figure.

pub mod bounds;
pub mod catalog;
pub mod color;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lp;
pub mod metrics;
pub mod optimize;
pub mod parallel;
pub mod random;
pub mod report;
pub mod spectra;

pub use bounds::{
    classic_kappa_bound, hoffman_bound, hoffman_type_bound, kappa_of, unified_kappa_bound,
    vector_r_bound, BoundKind, BoundReport,
};
pub use catalog::{catalog_names, named_graph};
pub use color::{distance_k_chromatic, exact_chromatic_number, ColoringResult};
pub use enumerate::enumerate_connected_graphs;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6};
pub use lp::{solve_bilp, solve_lp, MilpProblem, MilpSolution};
pub use metrics::{distance_matrix, power_graph, DistanceMatrix};
pub use optimize::{
    encode_hoffman_type_lp, encode_kappa_bilp, encode_vector_lp, optimize_hoffman_type,
    optimize_unified_kappa, optimize_vector_r,
};
pub use random::{erdos_renyi, SplitMix64};
pub use report::ExperimentRecord;
pub use spectra::{eigendecompose, matrix_polynomial, spectral_params, Polynomial, Spectrum};
