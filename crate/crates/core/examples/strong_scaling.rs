//! Speedup of the parallel pass on one Erdős–Rényi graph as workers grow.
//!
//!     cargo run --release --example strong_scaling [nodes] [edges] [max_workers]
//!
//! Writes results.csv and speedup_vs_workers.svg under target/bench-scaling.

use gee::bench::{emit_report, physical_cores, run_strong_scaling, speedups};
use gee::graph::{build_csr, generate_erdos_renyi};
use gee::labeling::random_labels;

fn main() -> gee::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(1_000_000);
    let s = args.next().unwrap_or(10_000_000);
    let max_workers = args.next().unwrap_or_else(|| physical_cores().max(4));

    let g = build_csr(&generate_erdos_renyi(n, s, 7)?);
    let y = random_labels(n, 50, 0.1, 8)?;

    let mut counts = vec![1];
    while counts.last().unwrap() * 2 <= max_workers {
        counts.push(counts.last().unwrap() * 2);
    }
    if *counts.last().unwrap() != max_workers {
        counts.push(max_workers);
    }

    let results = run_strong_scaling(&format!("er-{s}"), &g, &y, &counts, 3, true)?;
    println!("{} physical cores", physical_cores());
    for ((w, sp), r) in speedups(&results).into_iter().zip(&results) {
        println!("{w:>3} workers  {:.3}s  speedup {sp:.2}", r.median_s);
    }
    let files = emit_report(&results, "target/bench-scaling")?;
    println!("wrote {}", files.results_csv.display());
    Ok(())
}
