//! GEE proper: the projection `W`, the serial edge-list pass and the parallel
//! arc-map pass.

mod atomic;
mod edge_map;
mod embedding;
mod parallel;
mod projection;
mod serial;

pub use atomic::AtomicF64;
pub use edge_map::edge_map_dense;
pub use embedding::{
    read_embedding, write_embedding, EmbeddingFormat, EmbeddingMatrix, EMBEDDING_MAGIC,
};
pub use parallel::{
    edge_accounting, embed_parallel, embed_parallel_with, EdgeAccounting, ParallelOptions,
};
pub use projection::{build_projection, build_projection_parallel, ProjectionMatrix};
pub use serial::{embed_serial, embed_serial_with};
