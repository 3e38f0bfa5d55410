//! Embeds a random weighted graph serially and with 1..8 workers, for both
//! directed and symmetric storage, and reports the largest deviation.
//!
//!     cargo run --release --example parallel_vs_serial [nodes] [edges]

use std::time::Instant;

use gee::encoder::{embed_parallel, embed_serial, ParallelOptions};
use gee::graph::{build_csr, generate_erdos_renyi};
use gee::labeling::random_labels;
use gee::{edge_accounting, EdgeList};

fn main() -> gee::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(100_000);
    let s = args.next().unwrap_or(2_000_000);

    let base = generate_erdos_renyi(n, s, 1)?;
    // Reweight into (0, 2] so the sums are not all multiples of 1/|class|.
    let edges: Vec<_> = base
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| gee::graph::Edge::new(e.src, e.dst, 2.0 * ((i % 997) as f64 + 1.0) / 997.0))
        .collect();
    let y = random_labels(n, 50, 0.1, 2)?;

    for directed in [true, false] {
        let el = EdgeList::new(n, edges.clone(), directed)?;
        let t = Instant::now();
        let serial = embed_serial(&el, &y)?;
        println!(
            "directed={directed}: serial {:.3}s",
            t.elapsed().as_secs_f64()
        );

        let g = build_csr(&el);
        let accounting = edge_accounting(&g);
        for workers in [1, 2, 4, 8] {
            let t = Instant::now();
            let z = embed_parallel(&g, accounting, &y, ParallelOptions::new(workers))?;
            println!(
                "  {accounting:?}, {workers} workers: {:.3}s, max |diff| = {:e}",
                t.elapsed().as_secs_f64(),
                z.max_abs_diff(&serial).unwrap()
            );
        }
    }
    Ok(())
}
