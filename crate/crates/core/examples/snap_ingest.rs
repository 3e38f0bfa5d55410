//! Text edge list in, binary CSR cache and embedding out.
//!
//! Without arguments a small SNAP-style file is written to a temporary
//! directory first.
//!
//!     cargo run --release --example snap_ingest [edges.txt] [k]

use std::path::PathBuf;
use std::time::Instant;

use gee::edge_accounting;
use gee::encoder::{embed_parallel, write_embedding, EmbeddingFormat, ParallelOptions};
use gee::graph::{build_csr, load_edge_list, read_binary_cache, write_binary_cache};
use gee::labeling::random_labels;

fn main() -> gee::Result<()> {
    let work = std::env::temp_dir().join("gee-snap-ingest");
    std::fs::create_dir_all(&work).expect("create work dir");

    let mut args = std::env::args().skip(1);
    let input = match args.next() {
        Some(p) => PathBuf::from(p),
        None => {
            let p = work.join("toy.txt");
            let mut text = String::from("# Undirected toy graph\n# FromNodeId\tToNodeId\n");
            for i in 0..2000u32 {
                text.push_str(&format!(
                    "{i}\t{}\n{i}\t{}\n",
                    (i * 7 + 1) % 2000,
                    (i + 1) % 2000
                ));
            }
            std::fs::write(&p, text).expect("write toy graph");
            p
        }
    };
    let k: usize = args.next().map_or(50, |a| a.parse().expect("k"));

    let t = Instant::now();
    let el = load_edge_list(&input, false, false)?;
    println!(
        "parsed {} edges over {} nodes in {:.3}s",
        el.len(),
        el.n(),
        t.elapsed().as_secs_f64()
    );

    let cache = work.join("graph.csr");
    write_binary_cache(&build_csr(&el), &cache)?;
    let t = Instant::now();
    let g = read_binary_cache(&cache)?;
    println!(
        "reloaded {} arcs from {} in {:.3}s",
        g.num_arcs(),
        cache.display(),
        t.elapsed().as_secs_f64()
    );

    let y = random_labels(g.n(), k, 0.1, 42)?;
    let z = embed_parallel(&g, edge_accounting(&g), &y, ParallelOptions::default())?;
    let out = work.join("z.csv");
    write_embedding(&z, &out, EmbeddingFormat::Csv)?;
    println!("wrote {} x {} embedding to {}", z.n(), z.k(), out.display());
    Ok(())
}
