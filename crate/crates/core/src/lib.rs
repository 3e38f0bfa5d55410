//! One-hot graph encoder embedding (GEE) for shared-memory machines.
//!
//! Given an edge list and a partial labeling `Y` over `K` classes, GEE builds
//! an `n × K` embedding `Z` in a single pass over the edges: every edge
//! `(u, v, w)` adds `w / |class(v)|` to `Z[u, class(v)]` and `w / |class(u)|`
//! to `Z[v, class(u)]`. Unlabeled endpoints contribute nothing.
//!
//! The crate provides two routes to the same matrix:
//!
//! * [`encoder::embed_serial`] walks an [`EdgeList`] in order. It is
//!   deterministic and serves as the reference for everything else.
//! * [`encoder::embed_parallel`] maps an update over every arc of a
//!   [`CsrGraph`] with all vertices active, one worker per node range, and
//!   accumulates into `Z` through lock-free compare-and-swap on `f64` bits.
//!
//! Around the core sit text/binary graph ingestion ([`graph`]), label IO and
//! random partial labelings ([`labeling`]), and a small benchmark harness
//! ([`bench`]) for strong-scaling and edge-count sweeps.

pub mod bench;
pub mod cli;
pub mod encoder;
pub mod error;
pub mod graph;
pub mod labeling;

pub use encoder::{
    build_projection, edge_accounting, embed_parallel, embed_serial, EdgeAccounting,
    EmbeddingMatrix, ParallelOptions, ProjectionMatrix,
};
pub use error::{Error, Result};
pub use graph::{build_csr, CsrGraph, EdgeList, NodeId};
pub use labeling::LabelVector;
