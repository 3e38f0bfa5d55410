//! The `gee` command line.
//!
//! Exit codes: 0 on success, 1 for usage errors (unknown flags, missing or
//! out-of-range options), 2 when loading, validating or writing data fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, emit_report, SweepConfig};
use crate::encoder::{
    edge_accounting, embed_parallel, embed_serial, write_embedding, EmbeddingFormat,
    ParallelOptions,
};
use crate::error::Result;
use crate::graph::{build_csr, generate_erdos_renyi, load_edge_list, write_edge_list};
use crate::labeling::{load_labels, random_labels, write_labels};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gee", version, about = "One-hot graph encoder embedding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Embed a graph given a partial labeling.
    Embed(EmbedArgs),
    /// Write a random Erdős–Rényi edge list.
    GenEr(GenErArgs),
    /// Write a random partial labeling.
    GenLabels(GenLabelsArgs),
    /// Time the parallel pass at several worker counts.
    BenchScaling(BenchScalingArgs),
    /// Time the parallel pass on Erdős–Rényi graphs of increasing size.
    BenchSweep(BenchSweepArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Binary,
}

impl From<Format> for EmbeddingFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => EmbeddingFormat::Csv,
            Format::Binary => EmbeddingFormat::Binary,
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn unit_fraction(s: &str) -> std::result::Result<f64, String> {
    let f: f64 = s
        .parse()
        .map_err(|e: std::num::ParseFloatError| e.to_string())?;
    if (0.0..=1.0).contains(&f) {
        Ok(f)
    } else {
        Err("must lie in [0, 1]".into())
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Args)]
struct EmbedArgs {
    /// Text edge list.
    #[arg(long)]
    graph: PathBuf,
    /// Label file, one label per line or `node label` pairs.
    #[arg(long)]
    labels: PathBuf,
    /// Number of classes (embedding width).
    #[arg(long, value_parser = positive)]
    k: usize,
    /// Treat edges as directed arcs instead of symmetric pairs.
    #[arg(long)]
    directed: bool,
    /// Read a third column of edge weights.
    #[arg(long)]
    weighted: bool,
    /// Use the serial reference pass.
    #[arg(long)]
    serial: bool,
    #[arg(long, value_parser = positive, default_value_t = default_workers())]
    workers: usize,
    /// Plain, unsynchronized increments (may lose updates).
    #[arg(long)]
    no_atomics: bool,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct GenErArgs {
    #[arg(long, value_parser = positive)]
    nodes: usize,
    #[arg(long)]
    edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct GenLabelsArgs {
    #[arg(long, value_parser = positive)]
    nodes: usize,
    #[arg(long, value_parser = positive)]
    k: usize,
    #[arg(long, value_parser = unit_fraction, default_value_t = 0.1)]
    fraction: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct BenchScalingArgs {
    /// Text edge list to benchmark; a random graph is generated when absent.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    directed: bool,
    #[arg(long)]
    weighted: bool,
    #[arg(long, value_parser = positive, default_value_t = 1_000_000)]
    nodes: usize,
    #[arg(long, default_value_t = 30_000_000)]
    edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = positive, default_value_t = 50)]
    k: usize,
    #[arg(long, value_parser = unit_fraction, default_value_t = 0.1)]
    fraction: f64,
    /// Comma-separated worker counts.
    #[arg(long, value_delimiter = ',', value_parser = positive, default_values_t = [1usize, 2, 4])]
    workers: Vec<usize>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(bench::MIN_REPS as u64..), default_value_t = 5)]
    reps: u64,
    #[arg(long)]
    no_atomics: bool,
    #[arg(long, default_value = "bench-out")]
    out_dir: PathBuf,
}

#[derive(Debug, Args)]
struct BenchSweepArgs {
    /// Comma-separated, increasing edge counts.
    #[arg(long, value_delimiter = ',', value_parser = positive,
          default_values_t = [1_000_000usize, 2_000_000, 4_000_000, 8_000_000])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.05)]
    n_per_s: f64,
    #[arg(long, value_parser = positive, default_value_t = 50)]
    k: usize,
    #[arg(long, value_parser = positive, default_value_t = default_workers())]
    workers: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(bench::MIN_REPS as u64..), default_value_t = 5)]
    reps: u64,
    #[arg(long, default_value = "bench-out")]
    out_dir: PathBuf,
}

/// Parses `argv` (program name first) and runs the selected subcommand,
/// returning the process exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// [`run_cli`] with explicit output streams.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", rendered.ansi());
                    EXIT_USAGE
                }
            };
        }
    };

    let res = match cli.command {
        Command::Embed(a) => embed(a, out),
        Command::GenEr(a) => gen_er(a),
        Command::GenLabels(a) => gen_labels(a),
        Command::BenchScaling(a) => bench_scaling(a, out),
        Command::BenchSweep(a) => bench_sweep(a, out),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DATA
        }
    }
}

fn embed(a: EmbedArgs, out: &mut dyn Write) -> Result<()> {
    let el = load_edge_list(&a.graph, a.weighted, a.directed)?;
    let y = load_labels(&a.labels, el.n(), a.k)?;

    let (z, workers, time_s) = if a.serial {
        let t = Instant::now();
        let z = embed_serial(&el, &y)?;
        (z, 1, t.elapsed().as_secs_f64())
    } else {
        let g = build_csr(&el);
        let opts = ParallelOptions::new(a.workers).atomics(!a.no_atomics);
        let t = Instant::now();
        let z = embed_parallel(&g, edge_accounting(&g), &y, opts)?;
        (z, a.workers, t.elapsed().as_secs_f64())
    };
    write_embedding(&z, &a.out, a.format.into())?;
    let _ = writeln!(
        out,
        "n={} s={} k={} workers={workers} time_s={time_s}",
        el.n(),
        el.len(),
        a.k
    );
    Ok(())
}

fn gen_er(a: GenErArgs) -> Result<()> {
    let el = generate_erdos_renyi(a.nodes, a.edges, a.seed)?;
    write_edge_list(&el, &a.out, false)
}

fn gen_labels(a: GenLabelsArgs) -> Result<()> {
    let y = random_labels(a.nodes, a.k, a.fraction, a.seed)?;
    write_labels(&y, &a.out)
}

fn print_results(out: &mut dyn Write, results: &[bench::BenchResult]) {
    for r in results {
        let _ = writeln!(
            out,
            "{} n={} s={} k={} workers={} atomics={} median_s={:.6} reps={}",
            r.name,
            r.n,
            r.s,
            r.k,
            r.workers,
            r.atomics,
            r.median_s,
            r.reps()
        );
    }
}

fn bench_scaling(a: BenchScalingArgs, out: &mut dyn Write) -> Result<()> {
    let t = Instant::now();
    let (name, el) = match &a.graph {
        Some(p) => (
            p.file_stem()
                .map_or("graph".into(), |s| s.to_string_lossy().into_owned()),
            load_edge_list(p, a.weighted, a.directed)?,
        ),
        None => (
            format!("er-{}", a.edges),
            generate_erdos_renyi(a.nodes, a.edges, a.seed)?,
        ),
    };
    let g = build_csr(&el);
    drop(el);
    let y = random_labels(g.n().max(1), a.k, a.fraction, a.seed.wrapping_add(1))?;
    if y.len() != g.n() {
        // Only reachable for an empty edge file; nothing to time.
        return emit_report(&[], &a.out_dir).map(|_| ());
    }
    let _ = writeln!(out, "prepared {name} in {:.3}s", t.elapsed().as_secs_f64());

    let results =
        bench::run_strong_scaling(&name, &g, &y, &a.workers, a.reps as usize, !a.no_atomics)?;
    print_results(out, &results);
    for (w, s) in bench::speedups(&results) {
        let _ = writeln!(out, "speedup workers={w} {s:.3}");
    }
    let files = emit_report(&results, &a.out_dir)?;
    let _ = writeln!(out, "wrote {}", files.results_csv.display());
    Ok(())
}

fn bench_sweep(a: BenchSweepArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = SweepConfig {
        n_per_s: a.n_per_s,
        k: a.k,
        workers: a.workers,
        seed: a.seed,
        reps: a.reps as usize,
    };
    let results = bench::run_edge_sweep(&a.sizes, &cfg)?;
    print_results(out, &results);
    let xs: Vec<f64> = results.iter().map(|r| r.s as f64).collect();
    let ys: Vec<f64> = results.iter().map(|r| r.median_s).collect();
    if let Some(fit) = bench::linear_fit(&xs, &ys) {
        let _ = writeln!(
            out,
            "fit slope_s_per_edge={:.3e} intercept_s={:.4} r2={:.4}",
            fit.slope, fit.intercept, fit.r_squared
        );
    }
    let files = emit_report(&results, &a.out_dir)?;
    let _ = writeln!(out, "wrote {}", files.results_csv.display());
    Ok(())
}
