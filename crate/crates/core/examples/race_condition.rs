//! Two hubs of the same class pointing at the same leaves. Both hubs' workers
//! add into every leaf's class-1 cell at once, which is exactly where plain
//! read-modify-write loses increments.
//!
//!     cargo run --release --example race_condition [leaves] [runs] [workers]

use gee::encoder::{embed_parallel, embed_serial, ParallelOptions};
use gee::graph::{build_csr, Edge, EdgeList, NodeId};
use gee::{edge_accounting, LabelVector};

fn main() -> gee::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let leaves = args.next().unwrap_or(100_000);
    let runs = args.next().unwrap_or(20);
    let workers = args.next().unwrap_or(8);

    let n = leaves + 2;
    let edges = (0..2u32)
        .flat_map(|hub| (0..leaves).map(move |l| Edge::new(hub, (l + 2) as NodeId, 1.0)))
        .collect();
    let el = EdgeList::new(n, edges, true)?;
    let y = LabelVector::new(vec![1; n], 1)?;
    let serial = embed_serial(&el, &y)?;
    let g = build_csr(&el);

    for atomics in [true, false] {
        let mut bad_runs = 0;
        let mut worst = 0.0f64;
        for _ in 0..runs {
            let opts = ParallelOptions::new(workers).atomics(atomics);
            let z = embed_parallel(&g, edge_accounting(&g), &y, opts)?;
            let d = z.max_abs_diff(&serial).unwrap();
            worst = worst.max(d);
            bad_runs += usize::from(d > 1e-9);
        }
        println!("atomics={atomics}: {bad_runs}/{runs} runs deviate, worst |diff| = {worst:e}");
    }
    println!("(lost updates need truly simultaneous writers; on a single core they are rare)");
    Ok(())
}
