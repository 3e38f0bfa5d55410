//! Binary CSR cache.
//!
//! Layout, all integers little-endian:
//!
//! | field     | type            |
//! |-----------|-----------------|
//! | magic     | `b"GEECSR1\0"`  |
//! | version   | `u8`            |
//! | n         | `u64`           |
//! | arcs      | `u64`           |
//! | directed  | `u8` (0 or 1)   |
//! | offsets   | `u64 × (n + 1)` |
//! | targets   | `u32 × arcs`    |
//! | weights   | `f64 × arcs`    |

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{CsrGraph, NodeId};
use crate::error::{Error, Result};

pub const CACHE_MAGIC: &[u8; 8] = b"GEECSR1\0";
pub const CACHE_VERSION: u8 = 1;

pub fn write_binary_cache(g: &CsrGraph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::with_capacity(1 << 20, file);
    let write = |out: &mut BufWriter<fs::File>| -> std::io::Result<()> {
        out.write_all(CACHE_MAGIC)?;
        out.write_all(&[CACHE_VERSION])?;
        out.write_all(&(g.n() as u64).to_le_bytes())?;
        out.write_all(&(g.num_arcs() as u64).to_le_bytes())?;
        out.write_all(&[g.directed() as u8])?;
        for &o in g.offsets() {
            out.write_all(&(o as u64).to_le_bytes())?;
        }
        for &t in g.targets() {
            out.write_all(&t.to_le_bytes())?;
        }
        for &w in g.weights() {
            out.write_all(&w.to_le_bytes())?;
        }
        out.flush()
    };
    write(&mut out).map_err(|e| Error::io(path, e))
}

pub fn read_binary_cache(path: impl AsRef<Path>) -> Result<CsrGraph> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let format_err = |message: String| Error::Format {
        path: path.to_path_buf(),
        message,
    };
    let mut r = ByteReader::new(&bytes);

    let magic = r
        .take(8)
        .ok_or_else(|| format_err("truncated header".into()))?;
    if magic != CACHE_MAGIC {
        return Err(format_err("bad magic, not a CSR cache".into()));
    }
    let version = r
        .u8()
        .ok_or_else(|| format_err("truncated header".into()))?;
    if version != CACHE_VERSION {
        return Err(format_err(format!(
            "unsupported version {version}, expected {CACHE_VERSION}"
        )));
    }
    let truncated = || format_err("file truncated".into());
    let n = r.u64().ok_or_else(truncated)?;
    let arcs = r.u64().ok_or_else(truncated)?;
    let directed = match r.u8().ok_or_else(truncated)? {
        0 => false,
        1 => true,
        b => return Err(format_err(format!("invalid directed flag {b}"))),
    };

    // Check the payload size before allocating anything proportional to it.
    let expected = (n as u128 + 1) * 8 + arcs as u128 * (4 + 8);
    if (r.remaining() as u128) != expected {
        return Err(format_err(format!(
            "payload is {} bytes, header implies {expected}",
            r.remaining()
        )));
    }
    let (n, arcs) = (n as usize, arcs as usize);

    let offsets = (0..=n)
        .map(|_| r.u64().map(|o| o as usize))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(truncated)?;
    let targets = (0..arcs)
        .map(|_| r.u32())
        .collect::<Option<Vec<NodeId>>>()
        .ok_or_else(truncated)?;
    let weights = (0..arcs)
        .map(|_| r.u64().map(f64::from_bits))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(truncated)?;

    CsrGraph::from_parts(n, offsets, targets, weights, directed)
        .map_err(|e| format_err(e.to_string()))
}

pub(crate) struct ByteReader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> ByteReader<'a> {
    pub(crate) fn new(buf: &'a [u8]) -> Self {
        ByteReader { buf, pos: 0 }
    }

    pub(crate) fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    pub(crate) fn take(&mut self, len: usize) -> Option<&'a [u8]> {
        let end = self.pos.checked_add(len)?;
        let s = self.buf.get(self.pos..end)?;
        self.pos = end;
        Some(s)
    }

    pub(crate) fn u8(&mut self) -> Option<u8> {
        self.take(1).map(|b| b[0])
    }

    pub(crate) fn u32(&mut self) -> Option<u32> {
        self.take(4)
            .map(|b| u32::from_le_bytes(b.try_into().unwrap()))
    }

    pub(crate) fn u64(&mut self) -> Option<u64> {
        self.take(8)
            .map(|b| u64::from_le_bytes(b.try_into().unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, Edge, EdgeList};

    fn chain() -> CsrGraph {
        let el = EdgeList::new(3, vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 0.5)], false).unwrap();
        build_csr(&el)
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.bin");
        let g = chain();
        write_binary_cache(&g, &p).unwrap();
        assert_eq!(read_binary_cache(&p).unwrap(), g);
    }

    #[test]
    fn round_trip_empty() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.bin");
        let g = build_csr(&EdgeList::new(0, vec![], true).unwrap());
        write_binary_cache(&g, &p).unwrap();
        let back = read_binary_cache(&p).unwrap();
        assert_eq!(back, g);
        assert!(back.directed());
    }

    #[test]
    fn header_is_little_endian() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.bin");
        write_binary_cache(&chain(), &p).unwrap();
        let bytes = fs::read(&p).unwrap();
        assert_eq!(&bytes[..8], CACHE_MAGIC);
        assert_eq!(bytes[8], CACHE_VERSION);
        assert_eq!(&bytes[9..17], &3u64.to_le_bytes());
        assert_eq!(&bytes[17..25], &4u64.to_le_bytes());
        assert_eq!(bytes[25], 0);
        assert_eq!(bytes.len(), 26 + 4 * 8 + 4 * 4 + 4 * 8);
    }

    #[test]
    fn wrong_magic() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.bin");
        write_binary_cache(&chain(), &p).unwrap();
        let mut bytes = fs::read(&p).unwrap();
        bytes[0] = b'X';
        fs::write(&p, &bytes).unwrap();
        assert!(matches!(read_binary_cache(&p), Err(Error::Format { .. })));
    }

    #[test]
    fn wrong_version() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.bin");
        write_binary_cache(&chain(), &p).unwrap();
        let mut bytes = fs::read(&p).unwrap();
        bytes[8] = 9;
        fs::write(&p, &bytes).unwrap();
        assert!(matches!(read_binary_cache(&p), Err(Error::Format { .. })));
    }

    #[test]
    fn truncated() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.bin");
        write_binary_cache(&chain(), &p).unwrap();
        let bytes = fs::read(&p).unwrap();
        for cut in [0, 5, 12, 26, bytes.len() - 1] {
            fs::write(&p, &bytes[..cut]).unwrap();
            assert!(
                matches!(read_binary_cache(&p), Err(Error::Format { .. })),
                "cut at {cut}"
            );
        }
    }
}
