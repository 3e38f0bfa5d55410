//! Strong-scaling and edge-count sweeps over the parallel encoder.
//!
//! Only the edge-map pass sits inside the timer. Graph generation, CSR
//! construction and the projection are done before it and reported apart.
//! Every configuration gets one untimed warm-up run followed by `reps` timed
//! runs, executed back to back; the reported time is their median.

mod report;
mod stats;

use std::time::Instant;

pub use report::{emit_report, ReportFiles};
pub use stats::{linear_fit, median, LinearFit};

use crate::encoder::{
    build_projection_parallel, edge_accounting, embed_parallel_with, ParallelOptions,
};
use crate::error::{Error, Result};
use crate::graph::{build_csr, generate_erdos_renyi, CsrGraph};
use crate::labeling::{random_labels, LabelVector};

pub const MIN_REPS: usize = 3;

/// Labeled fraction used by the edge sweep.
pub const SWEEP_LABEL_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub name: String,
    pub n: usize,
    /// Arcs traversed by the edge map.
    pub s: usize,
    pub k: usize,
    pub workers: usize,
    pub atomics: bool,
    /// Median of `times_s`.
    pub median_s: f64,
    pub times_s: Vec<f64>,
    /// Untimed-region cost: projection build (plus generation for sweeps).
    pub setup_s: f64,
}

impl BenchResult {
    pub fn reps(&self) -> usize {
        self.times_s.len()
    }
}

fn check_reps(reps: usize) -> Result<()> {
    if reps < MIN_REPS {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_REPS} repetitions, got {reps}"
        )));
    }
    Ok(())
}

/// Times one parallel embedding configuration on a prepared graph.
pub fn time_embedding(
    name: &str,
    g: &CsrGraph,
    y: &LabelVector,
    opts: ParallelOptions,
    reps: usize,
) -> Result<BenchResult> {
    check_reps(reps)?;
    let t = Instant::now();
    let w = build_projection_parallel(y, opts.workers.max(1));
    let setup_s = t.elapsed().as_secs_f64();
    let accounting = edge_accounting(g);

    drop(embed_parallel_with(g, accounting, &w, opts)?);
    let mut times_s = Vec::with_capacity(reps);
    for _ in 0..reps {
        let t = Instant::now();
        let z = embed_parallel_with(g, accounting, &w, opts)?;
        // Floor at 1ns so per-rep times stay strictly positive.
        times_s.push(t.elapsed().as_secs_f64().max(1e-9));
        drop(z);
    }
    Ok(BenchResult {
        name: name.to_string(),
        n: g.n(),
        s: g.num_arcs(),
        k: y.k(),
        workers: opts.workers,
        atomics: opts.atomics,
        median_s: median(&times_s),
        times_s,
        setup_s,
    })
}

/// Runs the same embedding at each worker count, in the order given.
pub fn run_strong_scaling(
    name: &str,
    g: &CsrGraph,
    y: &LabelVector,
    worker_counts: &[usize],
    reps: usize,
    atomics: bool,
) -> Result<Vec<BenchResult>> {
    check_reps(reps)?;
    if worker_counts.is_empty() || worker_counts.contains(&0) {
        return Err(Error::InvalidArgument(
            "worker counts must be nonempty and positive".into(),
        ));
    }
    worker_counts
        .iter()
        .map(|&w| time_embedding(name, g, y, ParallelOptions::new(w).atomics(atomics), reps))
        .collect()
}

/// `(workers, time(base) / time(workers))` for each result, where the base is
/// the single-worker run, or the smallest worker count when there is none.
pub fn speedups(results: &[BenchResult]) -> Vec<(usize, f64)> {
    let Some(base) = results
        .iter()
        .find(|r| r.workers == 1)
        .or_else(|| results.iter().min_by_key(|r| r.workers))
    else {
        return Vec::new();
    };
    results
        .iter()
        .map(|r| (r.workers, base.median_s / r.median_s))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    /// Nodes per edge; `n = round(s · n_per_s)`.
    pub n_per_s: f64,
    pub k: usize,
    pub workers: usize,
    pub seed: u64,
    pub reps: usize,
}

/// Generates a directed Erdős–Rényi graph for every size in `sizes`, labels
/// 10% of its nodes at random and times the parallel embedding.
pub fn run_edge_sweep(sizes: &[usize], cfg: &SweepConfig) -> Result<Vec<BenchResult>> {
    check_reps(cfg.reps)?;
    if sizes.is_empty() {
        return Err(Error::InvalidArgument(
            "edge sweep needs at least one size".into(),
        ));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "edge sweep sizes must increase".into(),
        ));
    }
    if cfg.n_per_s.is_nan() || cfg.n_per_s <= 0.0 || cfg.k == 0 || cfg.workers == 0 {
        return Err(Error::InvalidArgument(
            "sweep needs n_per_s > 0, k >= 1 and workers >= 1".into(),
        ));
    }

    let mut out = Vec::with_capacity(sizes.len());
    for (i, &s) in sizes.iter().enumerate() {
        let seed = cfg.seed.wrapping_add(i as u64);
        let n = ((s as f64 * cfg.n_per_s).round() as usize).max(1);
        let t = Instant::now();
        let g = build_csr(&generate_erdos_renyi(n, s, seed)?);
        let y = random_labels(n, cfg.k, SWEEP_LABEL_FRACTION, seed ^ 0x9e37_79b9)?;
        let gen_s = t.elapsed().as_secs_f64();

        let mut r = time_embedding(
            &format!("er-{s}"),
            &g,
            &y,
            ParallelOptions::new(cfg.workers),
            cfg.reps,
        )?;
        r.setup_s += gen_s;
        out.push(r);
    }
    Ok(out)
}

/// Physical core count, falling back to logical.
pub fn physical_cores() -> usize {
    num_cpus::get_physical()
}
