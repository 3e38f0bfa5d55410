//! Partial class labelings.
//!
//! Label `0` marks a node whose class is unknown; known classes are `1..=k`.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use log::warn;
use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Class label of one node. `0` means unknown.
pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVector {
    labels: Vec<Label>,
    k: usize,
}

impl LabelVector {
    pub fn new(labels: Vec<Label>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Validation("class count k must be positive".into()));
        }
        if let Some((node, &l)) = labels.iter().enumerate().find(|(_, &l)| l as usize > k) {
            return Err(Error::Validation(format!(
                "node {node} has label {l}, outside 0..={k}"
            )));
        }
        Ok(LabelVector { labels, k })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Number of nodes covered.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of classes `K`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, node: usize) -> Label {
        self.labels[node]
    }

    pub fn labeled_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l != 0).count()
    }
}

/// `counts[c - 1]` is the number of nodes carrying class `c`.
pub fn class_counts(y: &LabelVector) -> Vec<usize> {
    let mut counts = vec![0usize; y.k];
    for &l in &y.labels {
        if l != 0 {
            counts[l as usize - 1] += 1;
        }
    }
    counts
}

/// Labels `round(fraction * n)` distinct nodes, chosen uniformly without
/// replacement, with classes drawn uniformly from `1..=k`. Every other node
/// stays unknown.
pub fn random_labels(n: usize, k: usize, fraction: f64, seed: u64) -> Result<LabelVector> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "random labels need n >= 1 and k >= 1 (got n = {n}, k = {k})"
        )));
    }
    if !(0.0..=1.0).contains(&fraction) {
        return Err(Error::InvalidArgument(format!(
            "labeled fraction {fraction} outside [0, 1]"
        )));
    }
    if k > Label::MAX as usize {
        return Err(Error::InvalidArgument(format!("k = {k} too large")));
    }

    let labeled = ((fraction * n as f64).round() as usize).min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let class = Uniform::new_inclusive(1, k as Label);
    let mut labels = vec![0 as Label; n];
    for node in rand::seq::index::sample(&mut rng, n, labeled) {
        labels[node] = class.sample(&mut rng);
    }
    Ok(LabelVector { labels, k })
}

/// Reads a label file for `n` nodes and `k` classes.
///
/// Two layouts are accepted and detected from the first data line: one label
/// per line (line `i` labels node `i`), or `node label` pairs where unlisted
/// nodes stay unknown. Blank lines and `#` comments are skipped.
pub fn load_labels(path: impl AsRef<Path>, n: usize, k: usize) -> Result<LabelVector> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    if k == 0 {
        return Err(Error::Validation("class count k must be positive".into()));
    }
    let parse_err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };

    let mut labels = vec![0 as Label; n];
    let mut pairs: Option<bool> = None;
    let mut next_node = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let is_pair = match fields.len() {
            1 => false,
            2 => true,
            f => {
                return Err(parse_err(
                    lineno,
                    format!("expected 1 or 2 fields, found {f}"),
                ))
            }
        };
        if *pairs.get_or_insert(is_pair) != is_pair {
            return Err(parse_err(
                lineno,
                "mixes label-per-line and pair layouts".into(),
            ));
        }

        let parse_int = |tok: &str, what: &str| {
            tok.parse::<u64>()
                .map_err(|_| parse_err(lineno, format!("invalid {what} {tok:?}")))
        };
        let (node, label) = if is_pair {
            (
                parse_int(fields[0], "node id")? as usize,
                parse_int(fields[1], "label")?,
            )
        } else {
            let node = next_node;
            next_node += 1;
            (node, parse_int(fields[0], "label")?)
        };

        if node >= n {
            return Err(Error::Validation(format!(
                "{}:{lineno}: node {node} outside 0..{n}",
                path.display()
            )));
        }
        if label > k as u64 {
            return Err(Error::Validation(format!(
                "{}:{lineno}: node {node} has label {label}, outside 0..={k}",
                path.display()
            )));
        }
        labels[node] = label as Label;
    }

    let y = LabelVector { labels, k };
    if y.labeled_count() == 0 {
        warn!(
            "{}: no labeled nodes, the embedding will be zero",
            path.display()
        );
    }
    Ok(y)
}

/// Writes one label per line, node `i` on line `i + 1`.
pub fn write_labels(y: &LabelVector, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    let write = |out: &mut BufWriter<fs::File>| -> std::io::Result<()> {
        for l in &y.labels {
            writeln!(out, "{l}")?;
        }
        out.flush()
    };
    write(&mut out).map_err(|e| Error::io(path, e))
}
