use super::atomic::{self, AtomicF64};
use super::{build_projection_parallel, edge_map_dense, EmbeddingMatrix, ProjectionMatrix};
use crate::error::{Error, Result};
use crate::graph::CsrGraph;
use crate::labeling::LabelVector;

/// Which of the two GEE updates each stored arc applies.
///
/// The serial pass applies both updates once per listed edge. A directed CSR
/// holds each edge as one arc, so that arc must apply both. A symmetric CSR
/// built from an undirected list holds every edge twice, and the mirror arc
/// already supplies the second update, so each arc applies only the
/// source-side one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeAccounting {
    /// `Z[u, Y(v)] += W(v)·w` and `Z[v, Y(u)] += W(u)·w`.
    BothEndpoints,
    /// `Z[u, Y(v)] += W(v)·w` only.
    SourceOnly,
}

/// The per-arc rule that makes the parallel pass over `g` reproduce the serial
/// pass over the edge list `g` was built from.
pub fn edge_accounting(g: &CsrGraph) -> EdgeAccounting {
    if g.directed() {
        EdgeAccounting::BothEndpoints
    } else {
        EdgeAccounting::SourceOnly
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelOptions {
    pub workers: usize,
    /// When false, increments are plain load/add/store and concurrent updates
    /// to one cell can be lost. Only useful for measuring the cost of atomics.
    pub atomics: bool,
}

impl ParallelOptions {
    pub fn new(workers: usize) -> Self {
        ParallelOptions {
            workers,
            atomics: true,
        }
    }

    pub fn atomics(mut self, atomics: bool) -> Self {
        self.atomics = atomics;
        self
    }
}

impl Default for ParallelOptions {
    fn default() -> Self {
        ParallelOptions::new(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

/// Parallel GEE over the arcs of `g` with every vertex active.
///
/// `W` is built in parallel first, then [`embed_parallel_with`] runs the edge
/// map.
pub fn embed_parallel(
    g: &CsrGraph,
    accounting: EdgeAccounting,
    y: &LabelVector,
    opts: ParallelOptions,
) -> Result<EmbeddingMatrix> {
    if g.n() != y.len() {
        return Err(Error::Contract(format!(
            "graph has {} nodes but {} labels",
            g.n(),
            y.len()
        )));
    }
    if opts.workers == 0 {
        return Err(Error::InvalidArgument("workers must be at least 1".into()));
    }
    let w = build_projection_parallel(y, opts.workers);
    embed_parallel_with(g, accounting, &w, opts)
}

/// The edge-map pass alone, for a prebuilt projection.
pub fn embed_parallel_with(
    g: &CsrGraph,
    accounting: EdgeAccounting,
    w: &ProjectionMatrix,
    opts: ParallelOptions,
) -> Result<EmbeddingMatrix> {
    if g.n() != w.n() {
        return Err(Error::Contract(format!(
            "graph has {} nodes but projection has {}",
            g.n(),
            w.n()
        )));
    }
    if opts.workers == 0 {
        return Err(Error::InvalidArgument("workers must be at least 1".into()));
    }
    let z = atomic::zeroed(g.n() * w.k());
    match (accounting, opts.atomics) {
        (EdgeAccounting::BothEndpoints, true) => accumulate::<true, true>(g, w, &z, opts.workers),
        (EdgeAccounting::BothEndpoints, false) => accumulate::<true, false>(g, w, &z, opts.workers),
        (EdgeAccounting::SourceOnly, true) => accumulate::<false, true>(g, w, &z, opts.workers),
        (EdgeAccounting::SourceOnly, false) => accumulate::<false, false>(g, w, &z, opts.workers),
    }
    EmbeddingMatrix::from_vec(g.n(), w.k(), atomic::into_f64_vec(z))
}

#[inline(always)]
fn add<const ATOMIC: bool>(cell: &AtomicF64, delta: f64) {
    if ATOMIC {
        cell.fetch_add(delta);
    } else {
        cell.add_unsynchronized(delta);
    }
}

fn accumulate<const BOTH: bool, const ATOMIC: bool>(
    g: &CsrGraph,
    w: &ProjectionMatrix,
    z: &[AtomicF64],
    workers: usize,
) {
    let k = w.k();
    let labels = w.labels();
    let scale = w.scales();
    edge_map_dense(g, workers, |u, v, weight| {
        let v = v as usize;
        let lv = labels[v] as usize;
        if lv != 0 {
            add::<ATOMIC>(&z[u * k + lv - 1], scale[v] * weight);
        }
        if BOTH {
            let lu = labels[u] as usize;
            if lu != 0 {
                add::<ATOMIC>(&z[v * k + lu - 1], scale[u] * weight);
            }
        }
    });
}
