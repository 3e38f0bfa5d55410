use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::NodeId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub src: NodeId,
    pub dst: NodeId,
    pub weight: f64,
}

impl Edge {
    pub fn new(src: NodeId, dst: NodeId, weight: f64) -> Self {
        Edge { src, dst, weight }
    }
}

impl From<(NodeId, NodeId, f64)> for Edge {
    fn from((src, dst, weight): (NodeId, NodeId, f64)) -> Self {
        Edge { src, dst, weight }
    }
}

/// A flat list of weighted edges over nodes `0..n`.
///
/// When `directed` is false every listed edge stands for the pair of arcs
/// `u -> v` and `v -> u`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    n: usize,
    edges: Vec<Edge>,
    directed: bool,
}

impl EdgeList {
    /// Builds an edge list, checking that endpoints are below `n` and that
    /// every weight is finite.
    pub fn new(n: usize, edges: Vec<Edge>, directed: bool) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.src as usize >= n || e.dst as usize >= n {
                return Err(Error::Validation(format!(
                    "edge {i} ({}, {}) has an endpoint outside 0..{n}",
                    e.src, e.dst
                )));
            }
            if !e.weight.is_finite() {
                return Err(Error::Validation(format!(
                    "edge {i} ({}, {}) has non-finite weight {}",
                    e.src, e.dst, e.weight
                )));
            }
        }
        Ok(EdgeList { n, edges, directed })
    }

    /// Like [`EdgeList::new`] but with `n` taken as one past the largest id.
    pub fn from_edges(edges: Vec<Edge>, directed: bool) -> Result<Self> {
        let n = edges
            .iter()
            .map(|e| e.src.max(e.dst) as usize + 1)
            .max()
            .unwrap_or(0);
        Self::new(n, edges, directed)
    }

    pub(crate) fn from_parts_unchecked(n: usize, edges: Vec<Edge>, directed: bool) -> Self {
        EdgeList { n, edges, directed }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of listed edges (`s`).
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    /// Returns a copy with `directed` replaced.
    pub fn with_directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    /// Returns a copy with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.src, e.dst, e.weight * factor))
            .collect();
        EdgeList {
            n: self.n,
            edges,
            directed: self.directed,
        }
    }
}

/// Parses a whitespace-separated text edge list.
///
/// Each non-comment line is `u v` or, when `weighted`, `u v w`. Lines whose
/// first non-blank character is `#` are skipped, as are blank lines. Node ids
/// are kept as written, so `n` is one past the largest id seen and any gaps
/// become isolated nodes. Unweighted files that carry a third column (SNAP
/// timestamps, for instance) have it ignored and every weight set to `1.0`.
pub fn load_edge_list(path: impl AsRef<Path>, weighted: bool, directed: bool) -> Result<EdgeList> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;

    let parse_err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };

    let mut edges = Vec::new();
    let mut max_id: Option<NodeId> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_ascii_whitespace();
        let src = parse_node_id(fields.next(), lineno, &parse_err)?;
        let dst = parse_node_id(fields.next(), lineno, &parse_err)?;
        let weight = if weighted {
            let tok = fields
                .next()
                .ok_or_else(|| parse_err(lineno, "missing weight column".into()))?;
            let w: f64 = tok
                .parse()
                .map_err(|_| parse_err(lineno, format!("invalid weight {tok:?}")))?;
            if !w.is_finite() {
                return Err(parse_err(lineno, format!("non-finite weight {tok:?}")));
            }
            w
        } else {
            1.0
        };
        if weighted {
            if let Some(extra) = fields.next() {
                return Err(parse_err(lineno, format!("unexpected field {extra:?}")));
            }
        }
        let hi = src.max(dst);
        max_id = Some(max_id.map_or(hi, |m| m.max(hi)));
        edges.push(Edge::new(src, dst, weight));
    }

    let n = max_id.map_or(0, |m| m as usize + 1);
    Ok(EdgeList::from_parts_unchecked(n, edges, directed))
}

fn parse_node_id(
    tok: Option<&str>,
    lineno: usize,
    parse_err: &impl Fn(usize, String) -> Error,
) -> Result<NodeId> {
    let tok = tok.ok_or_else(|| parse_err(lineno, "expected at least two fields".into()))?;
    tok.parse::<NodeId>().map_err(|_| {
        let message = if tok.starts_with('-') && tok[1..].chars().all(|c| c.is_ascii_digit()) {
            format!("negative node id {tok}")
        } else {
            format!("invalid node id {tok:?}")
        };
        parse_err(lineno, message)
    })
}

/// Writes `el` in the text format read by [`load_edge_list`].
///
/// With `weighted` false only the two endpoint columns are written.
pub fn write_edge_list(el: &EdgeList, path: impl AsRef<Path>, weighted: bool) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    let write = |out: &mut BufWriter<fs::File>| -> std::io::Result<()> {
        for e in el.edges() {
            if weighted {
                writeln!(out, "{} {} {}", e.src, e.dst, e.weight)?;
            } else {
                writeln!(out, "{} {}", e.src, e.dst)?;
            }
        }
        out.flush()
    };
    write(&mut out).map_err(|e| Error::io(path, e))
}
