//! Runtime against edge count on Erdős–Rényi graphs at a fixed n/s ratio, with
//! a least-squares line through the medians.
//!
//!     cargo run --release --example edge_sweep [max_edges]
//!
//! Writes results.csv and time_vs_edges.svg under target/bench-sweep.

use gee::bench::{emit_report, linear_fit, run_edge_sweep, SweepConfig};

fn main() -> gee::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(8_000_000, |a| a.parse().expect("numeric argument"));
    let sizes: Vec<usize> = [8, 4, 2, 1].iter().map(|d| max / d).collect();

    let cfg = SweepConfig {
        n_per_s: 0.05,
        k: 50,
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        seed: 3,
        reps: 5,
    };
    let results = run_edge_sweep(&sizes, &cfg)?;
    for r in &results {
        println!("s={:>10} n={:>9} median {:.4}s", r.s, r.n, r.median_s);
    }
    let xs: Vec<f64> = results.iter().map(|r| r.s as f64).collect();
    let ys: Vec<f64> = results.iter().map(|r| r.median_s).collect();
    if let Some(fit) = linear_fit(&xs, &ys) {
        println!("{:.2} ns/edge, R^2 = {:.4}", fit.slope * 1e9, fit.r_squared);
    }
    let files = emit_report(&results, "target/bench-sweep")?;
    println!("wrote {}", files.results_csv.display());
    Ok(())
}
