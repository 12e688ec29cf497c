//! Command-line surface: per-graph bound reports, Table 1 / Table 2
//! reproduction, and the Figure 2 sampling experiment.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectral_chroma::bounds::{
    hoffman_bound, hoffman_type_bound, unified_kappa_bound, vector_r_bound, BoundReport,
};
use spectral_chroma::enumerate::enumerate_connected_graphs;
use spectral_chroma::optimize::{encode_hoffman_type_lp, encode_kappa_bilp, encode_vector_lp};
use spectral_chroma::report::{self, EXPECTED_TABLE2};
use spectral_chroma::spectra::{eigendecompose, Polynomial, Spectrum};
use spectral_chroma::{
    catalog_names, named_graph, optimize_hoffman_type, optimize_unified_kappa, optimize_vector_r,
    parse_graph6, Graph,
};

#[derive(Parser)]
#[command(
    name = "spectral-chroma",
    version,
    about = "Eigenvalue lower bounds on distance-k chromatic, quantum and vector chromatic numbers"
)]
struct Cli {
    /// Worker threads for batch work (default: machine parallelism).
    /// The SPECTRAL_CHROMA_JOBS environment variable overrides this flag.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one lower bound for one graph (or each graph in a file).
    Bound(BoundArgs),
    /// Reproduce Table 1 (all 44 named graphs, k = 2) and compare cell-for-cell.
    Table1(Table1Args),
    /// Reproduce Table 2 (sharpness census over all connected graphs per order).
    Table2(Table2Args),
    /// Figure 2 experiment: strict κ-over-Hoffman-type proportion on G(n, 1/2).
    Figure2(Figure2Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundName {
    /// Classical Hoffman bound 1 − λ_1/λ_n (k = 1, no polynomial).
    Hoffman,
    /// Hoffman-type ratio bound (p(λ_1) − λ(p)) / (W(p) − λ(p)).
    HoffmanType,
    /// Vector chromatic bound via R(p) (Theorem 5.4 shape).
    VectorR,
    /// Unified κ bound κ(p) + 1.
    UnifiedKappa,
}

#[derive(Args)]
struct BoundArgs {
    /// Catalog graph name (see `table1` for the list).
    #[arg(long, conflicts_with_all = ["graph6", "graph6_file"])]
    graph: Option<String>,
    /// A graph6 string.
    #[arg(long, conflicts_with = "graph6_file")]
    graph6: Option<String>,
    /// A file with one graph6 line per graph ('#' comments ignored).
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    /// Distance parameter k (bounds χ_k of the k-th power graph).
    #[arg(short, default_value_t = 1)]
    k: usize,
    /// Which bound to compute.
    #[arg(long, value_enum)]
    bound: BoundName,
    /// Optimize the witness polynomial (LP/BILP sweep).
    #[arg(long, conflicts_with = "coeffs")]
    optimize: bool,
    /// Fixed witness polynomial as comma-separated coefficients a0,a1,...
    #[arg(long)]
    coeffs: Option<String>,
    /// Directory for LP-format dumps of every subproblem encoding.
    #[arg(long)]
    dump_lp: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Table1Args {
    /// Write the records to this file (stdout report is always printed).
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct Table2Args {
    #[arg(long, default_value_t = 3)]
    min_n: usize,
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Connected graphs on 8 vertices in graph6 format (required for n = 8;
    /// built-in enumeration covers n ≤ 7 only).
    #[arg(long)]
    graph6_file: Option<PathBuf>,
}

#[derive(Args)]
struct Figure2Args {
    #[arg(long, default_value_t = 5)]
    min_n: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Connected G(n, 1/2) samples per order.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = std::env::var("SPECTRAL_CHROMA_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .or(cli.jobs);
    if let Some(jobs) = jobs {
        spectral_chroma::parallel::set_jobs(jobs);
    }
    let result = match cli.cmd {
        Cmd::Bound(args) => cmd_bound(&args),
        Cmd::Table1(args) => cmd_table1(&args),
        Cmd::Table2(args) => cmd_table2(&args),
        Cmd::Figure2(args) => cmd_figure2(&args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

/// Read a graph6 file: one graph per line, blank lines and '#' comments ignored.
fn read_graph6_file(path: &PathBuf) -> Result<Vec<(String, Graph)>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| format!("{} line {}: {e}", path.display(), lineno + 1))?;
        out.push((line.to_string(), g));
    }
    Ok(out)
}

fn parse_coeffs(text: &str) -> Result<Polynomial, String> {
    let coefficients: Result<Vec<f64>, _> =
        text.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let coefficients = coefficients.map_err(|e| format!("bad --coeffs value: {e}"))?;
    if coefficients.is_empty() {
        return Err("--coeffs needs at least one coefficient".into());
    }
    Ok(Polynomial::new(coefficients))
}

fn sanitize(id: &str) -> String {
    id.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

/// Write every subproblem encoding of the selected bound in LP format,
/// keyed by graph id, k, and subproblem index.
fn dump_encodings(
    dir: &PathBuf,
    id: &str,
    g: &Graph,
    spec: &Spectrum,
    k: usize,
    bound: BoundName,
) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let write = |stem: String, text: String| -> Result<(), String> {
        let path = dir.join(format!("{}_k{}_{}.lp", sanitize(id), k, stem));
        std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
    };
    match bound {
        BoundName::Hoffman => {}
        BoundName::HoffmanType => {
            for m in 0..g.n() {
                for mprime in 1..=spec.d() {
                    let enc = encode_hoffman_type_lp(g, spec, k, m, mprime);
                    write(
                        format!("hoffman-type_m{m}_mp{mprime}"),
                        enc.problem.to_lp_format(),
                    )?;
                }
            }
        }
        BoundName::VectorR => {
            for mprime in 1..=spec.d() {
                let enc = encode_vector_lp(g, spec, k, mprime);
                write(format!("vector-r_mp{mprime}"), enc.problem.to_lp_format())?;
            }
        }
        BoundName::UnifiedKappa => {
            for m in 0..g.n() {
                let enc = encode_kappa_bilp(g, spec, k, m);
                write(format!("unified-kappa_m{m}"), enc.problem.to_lp_format())?;
            }
        }
    }
    Ok(())
}

fn print_report(id: &str, g: &Graph, report: &BoundReport, mode: &str) {
    println!("graph: {id} (n = {}, edges = {})", g.n(), g.edge_count());
    println!("bound: {mode} (k = {})", report.k);
    println!("raw value: {}", report.raw);
    println!("lower bound: {}", report.lower_bound);
    if let Some(kappa) = report.kappa {
        println!("kappa: {kappa}");
    }
    println!("witness polynomial coefficients: {:?}", report.witness.coefficients);
}

fn cmd_bound(args: &BoundArgs) -> Result<ExitCode, String> {
    let graphs: Vec<(String, Graph)> = if let Some(name) = &args.graph {
        let g = named_graph(name).map_err(|e| e.to_string())?;
        vec![(name.clone(), g)]
    } else if let Some(text) = &args.graph6 {
        let g = parse_graph6(text).map_err(|e| e.to_string())?;
        vec![(text.clone(), g)]
    } else if let Some(path) = &args.graph6_file {
        read_graph6_file(path)?
    } else {
        return Err(format!(
            "no graph source; use --graph NAME, --graph6 STRING or --graph6-file PATH\n\
             catalog names: {}",
            catalog_names().join(", ")
        ));
    };
    let fixed: Option<Polynomial> = args.coeffs.as_deref().map(parse_coeffs).transpose()?;
    if matches!(args.bound, BoundName::Hoffman) && (args.optimize || fixed.is_some()) {
        return Err("the Hoffman bound takes no polynomial; drop --optimize/--coeffs".into());
    }
    if !matches!(args.bound, BoundName::Hoffman) && !args.optimize && fixed.is_none() {
        return Err("choose a polynomial mode: --optimize or --coeffs a0,a1,...".into());
    }

    for (id, g) in &graphs {
        let spec = eigendecompose(g, 1e-8).map_err(|e| e.to_string())?;
        if let Some(dir) = &args.dump_lp {
            dump_encodings(dir, id, g, &spec, args.k, args.bound)?;
        }
        let (report, mode) = match (args.bound, &fixed) {
            (BoundName::Hoffman, _) => (hoffman_bound(&spec), "hoffman"),
            (BoundName::HoffmanType, None) => {
                (optimize_hoffman_type(g, &spec, args.k), "hoffman-type, optimized")
            }
            (BoundName::HoffmanType, Some(p)) => {
                (hoffman_type_bound(g, p, &spec, args.k), "hoffman-type, fixed p")
            }
            (BoundName::VectorR, None) => {
                (optimize_vector_r(g, &spec, args.k), "vector-r, optimized")
            }
            (BoundName::VectorR, Some(p)) => {
                (vector_r_bound(g, p, &spec, args.k), "vector-r, fixed p")
            }
            (BoundName::UnifiedKappa, None) => {
                (optimize_unified_kappa(g, &spec, args.k), "unified-kappa, optimized")
            }
            (BoundName::UnifiedKappa, Some(p)) => {
                (unified_kappa_bound(g, p, &spec, args.k), "unified-kappa, fixed p")
            }
        };
        let report = report.map_err(|e| format!("{id}: {e}"))?;
        print_report(id, g, &report, mode);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table1(args: &Table1Args) -> Result<ExitCode, String> {
    let records = report::table1_records().map_err(|e| e.to_string())?;
    if let Some(path) = &args.output {
        let text = match args.format {
            Format::Csv => report::records_to_csv(&records),
            Format::Json => report::records_to_json(&records),
        };
        std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("wrote {} records to {}", records.len(), path.display());
    }
    println!("graph_id,hoffman_type,vector_r,unified_kappa,chi_2,improved");
    for r in &records {
        let chi = r.chi_k.map_or_else(|| "budget-exceeded".into(), |c| c.to_string());
        println!(
            "{},{},{},{},{},{}",
            r.graph_id, r.hoffman_type, r.vector_r, r.unified_kappa, chi, r.improved
        );
    }
    let mismatches = report::table1_mismatches(&records);
    if mismatches.is_empty() {
        println!("{} rows, 0 mismatches against the published table", records.len());
        Ok(ExitCode::SUCCESS)
    } else {
        for m in &mismatches {
            eprintln!("MISMATCH {m}");
        }
        eprintln!("{} mismatches", mismatches.len());
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_table2(args: &Table2Args) -> Result<ExitCode, String> {
    if args.min_n < 3 || args.max_n > 8 || args.min_n > args.max_n {
        return Err("supported n range is 3..=8 with min <= max".into());
    }
    let mut mismatch = false;
    println!("n,hoffman_sharp,kappa_sharp,total");
    for n in args.min_n..=args.max_n {
        let graphs: Vec<Graph> = if n <= 7 {
            enumerate_connected_graphs(n).map_err(|e| e.to_string())?
        } else {
            let path = args
                .graph6_file
                .as_ref()
                .ok_or("n = 8 requires --graph6-file with the connected graphs on 8 vertices")?;
            read_graph6_file(path)?.into_iter().map(|(_, g)| g).collect()
        };
        let [h, k, total] = report::table2_counts(&graphs).map_err(|e| e.to_string())?;
        let expect = EXPECTED_TABLE2.iter().find(|(m, _)| *m == n).map(|(_, e)| *e);
        let verdict = match expect {
            Some(e) if e == [h, k, total] => "ok",
            Some(_) => {
                mismatch = true;
                "MISMATCH"
            }
            None => "",
        };
        println!("{n},{h},{k},{total} {verdict}");
    }
    Ok(if mismatch { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_declaration_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn coefficient_parsing() {
        let p = parse_coeffs("0, -1.5,2").unwrap();
        assert_eq!(p.coefficients, vec![0.0, -1.5, 2.0]);
        assert!(parse_coeffs("").is_err());
        assert!(parse_coeffs("1,x").is_err());
    }

    #[test]
    fn filename_sanitizing() {
        assert_eq!(sanitize("K_{3,3}-e"), "K__3_3__e");
        assert_eq!(sanitize("petersen"), "petersen");
    }
}

fn cmd_figure2(args: &Figure2Args) -> Result<ExitCode, String> {
    if args.samples == 0 {
        return Err("--samples must be at least 1".into());
    }
    if args.min_n < 2 || args.min_n > args.max_n {
        return Err("need 2 <= min-n <= max-n".into());
    }
    let mut csv = String::from("n,samples,proportion\n");
    for n in args.min_n..=args.max_n {
        let p = report::figure2_proportion(n, args.samples, args.seed.wrapping_add(n as u64))
            .map_err(|e| e.to_string())?;
        writeln!(csv, "{n},{},{p}", args.samples).expect("string write");
    }
    match &args.output {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
