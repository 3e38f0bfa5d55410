//! Graph storage, ingestion and synthetic generation.
//!
//! An [`EdgeList`] is what GEE's serial pass consumes; a [`CsrGraph`] is what
//! the parallel edge map traverses. Both are immutable once built and can be
//! shared read-only across worker threads.

pub(crate) mod cache;
mod csr;
mod edge_list;
mod generate;

pub use cache::{read_binary_cache, write_binary_cache, CACHE_MAGIC, CACHE_VERSION};
pub use csr::{build_csr, CsrGraph};
pub use edge_list::{load_edge_list, write_edge_list, Edge, EdgeList};
pub use generate::generate_erdos_renyi;

/// Node identifier. Ids are dense indices into `0..n`.
pub type NodeId = u32;
