//! Dense edge map over a CSR graph.
//!
//! Every vertex is active. Workers pull chunks of consecutive nodes from a
//! shared cursor; a node's arcs are always walked sequentially by the worker
//! that owns the node, so the source row stays hot in cache while distinct
//! nodes proceed concurrently.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use crate::graph::{CsrGraph, NodeId};

const MAX_CHUNK: usize = 4096;

fn chunk_size(n: usize, workers: usize) -> usize {
    // Aim for a few dozen chunks per worker so skewed degrees even out.
    (n / (workers * 32)).clamp(1, MAX_CHUNK)
}

/// Calls `update(u, v, w)` once for every arc `u -> v` of `g`, using
/// `workers` threads. Blocks until all arcs are processed.
pub fn edge_map_dense<F>(g: &CsrGraph, workers: usize, update: F)
where
    F: Fn(usize, NodeId, f64) + Sync,
{
    assert!(workers >= 1, "edge map needs at least one worker");
    let n = g.n();
    let offsets = g.offsets();
    let targets = g.targets();
    let weights = g.weights();

    let visit = |u: usize| {
        let range = offsets[u]..offsets[u + 1];
        for (&v, &w) in targets[range.clone()].iter().zip(&weights[range]) {
            update(u, v, w);
        }
    };

    if workers == 1 {
        (0..n).for_each(visit);
        return;
    }

    let chunk = chunk_size(n, workers);
    let cursor = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let start = cursor.fetch_add(chunk, Ordering::Relaxed);
                if start >= n {
                    break;
                }
                (start..(start + chunk).min(n)).for_each(visit);
            });
        }
    });
}
