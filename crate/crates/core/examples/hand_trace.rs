//! The three-node chain 0 -> 1 -> 2 with labels [1, 1, 2], embedded by both
//! passes.
//!
//!     cargo run --example hand_trace

use gee::encoder::{build_projection, embed_parallel, embed_serial, ParallelOptions};
use gee::graph::{build_csr, Edge, EdgeList};
use gee::{edge_accounting, LabelVector};

fn main() -> gee::Result<()> {
    let el = EdgeList::new(3, vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 1.0)], true)?;
    let y = LabelVector::new(vec![1, 1, 2], 2)?;

    println!("W nonzeros (node, class, value):");
    for nz in build_projection(&y).nonzeros() {
        println!("  {nz:?}");
    }

    let serial = embed_serial(&el, &y)?;
    println!("serial Z:");
    for row in serial.rows() {
        println!("  {row:?}");
    }

    let g = build_csr(&el);
    let parallel = embed_parallel(&g, edge_accounting(&g), &y, ParallelOptions::new(4))?;
    println!(
        "parallel Z, 4 workers: max |diff| vs serial = {:e}",
        parallel.max_abs_diff(&serial).unwrap()
    );
    Ok(())
}
