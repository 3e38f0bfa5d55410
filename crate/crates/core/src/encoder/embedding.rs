//! The dense embedding `Z` and its on-disk formats.
//!
//! CSV: one line per node, `K` comma-separated values in shortest round-trip
//! decimal form. Binary: magic `b"GEEEMB1\0"`, then `n` and `K` as
//! little-endian `u64`, then the row-major `f64` values, little-endian.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::cache::ByteReader;

pub const EMBEDDING_MAGIC: &[u8; 8] = b"GEEEMB1\0";

/// Dense row-major `n × K` matrix. Column `j` holds class `j + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix {
    n: usize,
    k: usize,
    values: Vec<f64>,
}

impl EmbeddingMatrix {
    pub fn zeros(n: usize, k: usize) -> Self {
        EmbeddingMatrix {
            n,
            k,
            values: vec![0.0; n * k],
        }
    }

    pub fn from_vec(n: usize, k: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != n * k {
            return Err(Error::Contract(format!(
                "{} values for a {n} x {k} embedding",
                values.len()
            )));
        }
        Ok(EmbeddingMatrix { n, k, values })
    }

    /// Builds a matrix from nested rows, mostly for tests and examples.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let k = rows.first().map_or(0, |r| r.as_ref().len());
        let mut values = Vec::with_capacity(rows.len() * k);
        for r in rows {
            if r.as_ref().len() != k {
                return Err(Error::Contract("ragged embedding rows".into()));
            }
            values.extend_from_slice(r.as_ref());
        }
        Ok(EmbeddingMatrix {
            n: rows.len(),
            k,
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn row(&self, node: usize) -> &[f64] {
        &self.values[node * self.k..(node + 1) * self.k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        // chunks_exact panics on 0, and a zero-width matrix still has n rows.
        let k = self.k;
        (0..self.n).map(move |i| &self.values[i * k..(i + 1) * k])
    }

    pub fn get(&self, node: usize, column: usize) -> f64 {
        self.values[node * self.k + column]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest absolute entrywise difference. `None` if the shapes differ.
    pub fn max_abs_diff(&self, other: &EmbeddingMatrix) -> Option<f64> {
        if self.n != other.n || self.k != other.k {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }

    /// Entrywise bit-for-bit equality (distinguishes `0.0` from `-0.0`).
    pub fn bitwise_eq(&self, other: &EmbeddingMatrix) -> bool {
        self.n == other.n
            && self.k == other.k
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingFormat {
    Csv,
    Binary,
}

pub fn write_embedding(
    z: &EmbeddingMatrix,
    path: impl AsRef<Path>,
    format: EmbeddingFormat,
) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::with_capacity(1 << 20, file);
    let res = match format {
        EmbeddingFormat::Csv => write_csv(z, &mut out),
        EmbeddingFormat::Binary => write_binary(z, &mut out),
    };
    res.and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

fn write_csv(z: &EmbeddingMatrix, out: &mut impl Write) -> std::io::Result<()> {
    for row in z.rows() {
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                out.write_all(b",")?;
            }
            write!(out, "{v}")?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn write_binary(z: &EmbeddingMatrix, out: &mut impl Write) -> std::io::Result<()> {
    out.write_all(EMBEDDING_MAGIC)?;
    out.write_all(&(z.n as u64).to_le_bytes())?;
    out.write_all(&(z.k as u64).to_le_bytes())?;
    for v in &z.values {
        out.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

/// Reads an embedding written in [`EmbeddingFormat::Binary`].
pub fn read_embedding(path: impl AsRef<Path>) -> Result<EmbeddingMatrix> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let format_err = |message: &str| Error::Format {
        path: path.to_path_buf(),
        message: message.to_string(),
    };
    let mut r = ByteReader::new(&bytes);
    if r.take(8).ok_or_else(|| format_err("truncated header"))? != EMBEDDING_MAGIC {
        return Err(format_err("bad magic, not an embedding file"));
    }
    let n = r.u64().ok_or_else(|| format_err("truncated header"))?;
    let k = r.u64().ok_or_else(|| format_err("truncated header"))?;
    if n as u128 * k as u128 * 8 != r.remaining() as u128 {
        return Err(format_err("payload size does not match n x k"));
    }
    let values = (0..n * k)
        .map(|_| r.u64().map(f64::from_bits))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| format_err("file truncated"))?;
    Ok(EmbeddingMatrix {
        n: n as usize,
        k: k as usize,
        values,
    })
}
