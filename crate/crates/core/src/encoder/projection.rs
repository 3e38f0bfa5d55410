use std::thread;

use log::warn;

use crate::labeling::{class_counts, Label, LabelVector};

/// The `n × K` projection `W`, stored as one scalar per node.
///
/// Row `i` of `W` is zero when node `i` is unlabeled, and otherwise has a
/// single nonzero `1 / |class c|` at column `c = Y(i)`. Keeping only that
/// scalar next to the label makes `W` `O(n)` instead of `O(nK)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionMatrix {
    k: usize,
    labels: Vec<Label>,
    scale: Vec<f64>,
}

impl ProjectionMatrix {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// `W(i, Y(i))` for every node; zero for unlabeled nodes.
    pub fn scales(&self) -> &[f64] {
        &self.scale
    }

    /// Entry `W(node, class)` with `class` in `1..=K`.
    pub fn entry(&self, node: usize, class: usize) -> f64 {
        if class != 0 && self.labels[node] as usize == class {
            self.scale[node]
        } else {
            0.0
        }
    }

    /// Nonzero entries as `(node, class, value)`, classes 1-based.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.labels
            .iter()
            .zip(&self.scale)
            .enumerate()
            .filter(|(_, (&l, _))| l != 0)
            .map(|(i, (&l, &s))| (i, l as usize, s))
    }

    /// Column sums of `W`, entry `c - 1` for class `c`.
    pub fn column_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.k];
        for (_, class, v) in self.nonzeros() {
            sums[class - 1] += v;
        }
        sums
    }
}

fn inverse_counts(counts: &[usize]) -> Vec<f64> {
    let empty: Vec<usize> = (1..=counts.len()).filter(|&c| counts[c - 1] == 0).collect();
    if !empty.is_empty() {
        warn!("classes with no labeled nodes leave zero columns: {empty:?}");
    }
    counts
        .iter()
        .map(|&c| if c == 0 { 0.0 } else { 1.0 / c as f64 })
        .collect()
}

#[inline]
fn scale_of(inv: &[f64], l: Label) -> f64 {
    if l == 0 {
        0.0
    } else {
        inv[l as usize - 1]
    }
}

/// Builds `W` from a labeling: every node of class `c` gets `1 / count(Y = c)`.
/// Classes with no members contribute nothing.
pub fn build_projection(y: &LabelVector) -> ProjectionMatrix {
    let inv = inverse_counts(&class_counts(y));
    ProjectionMatrix {
        k: y.k(),
        labels: y.labels().to_vec(),
        scale: y.labels().iter().map(|&l| scale_of(&inv, l)).collect(),
    }
}

/// Same result as [`build_projection`], with the class histogram and the
/// per-node fill split across `workers` threads.
pub fn build_projection_parallel(y: &LabelVector, workers: usize) -> ProjectionMatrix {
    let workers = workers.max(1);
    let labels = y.labels();
    let k = y.k();
    let chunk = labels.len().div_ceil(workers).max(1);

    let counts = thread::scope(|s| {
        let handles: Vec<_> = labels
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    let mut local = vec![0usize; k];
                    for &l in part {
                        if l != 0 {
                            local[l as usize - 1] += 1;
                        }
                    }
                    local
                })
            })
            .collect();
        let mut total = vec![0usize; k];
        for h in handles {
            for (t, c) in total
                .iter_mut()
                .zip(h.join().expect("histogram worker panicked"))
            {
                *t += c;
            }
        }
        total
    });

    let inv = inverse_counts(&counts);
    let mut scale = vec![0.0f64; labels.len()];
    thread::scope(|s| {
        for (out, part) in scale.chunks_mut(chunk).zip(labels.chunks(chunk)) {
            let inv = &inv;
            s.spawn(move || {
                for (o, &l) in out.iter_mut().zip(part) {
                    *o = scale_of(inv, l);
                }
            });
        }
    });

    ProjectionMatrix {
        k,
        labels: labels.to_vec(),
        scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::random_labels;

    fn nz(y: &[Label], k: usize) -> Vec<(usize, usize, f64)> {
        build_projection(&LabelVector::new(y.to_vec(), k).unwrap())
            .nonzeros()
            .collect()
    }

    #[test]
    fn two_classes() {
        assert_eq!(
            nz(&[1, 1, 2], 2),
            vec![(0, 1, 0.5), (1, 1, 0.5), (2, 2, 1.0)]
        );
    }

    #[test]
    fn all_unknown() {
        assert!(nz(&[0, 0, 0], 2).is_empty());
    }

    #[test]
    fn uneven_classes() {
        assert_eq!(
            nz(&[1, 2, 2, 2, 2], 2),
            vec![
                (0, 1, 1.0),
                (1, 2, 0.25),
                (2, 2, 0.25),
                (3, 2, 0.25),
                (4, 2, 0.25)
            ]
        );
    }

    #[test]
    fn empty_class_column_is_zero() {
        let w = build_projection(&LabelVector::new(vec![1, 0, 1], 3).unwrap());
        assert_eq!(w.column_sums(), vec![1.0, 0.0, 0.0]);
        assert_eq!(w.entry(0, 1), 0.5);
        assert_eq!(w.entry(0, 2), 0.0);
        assert_eq!(w.entry(1, 1), 0.0);
    }

    #[test]
    fn parallel_matches_serial() {
        for (n, k, seed) in [(1, 1, 0), (7, 3, 1), (10_000, 50, 2), (12_345, 7, 3)] {
            let y = random_labels(n, k, 0.4, seed).unwrap();
            let serial = build_projection(&y);
            for workers in [1, 2, 3, 8, 64] {
                assert_eq!(build_projection_parallel(&y, workers), serial);
            }
        }
    }

    #[test]
    fn parallel_on_empty_labels() {
        let y = LabelVector::new(vec![], 2).unwrap();
        assert_eq!(build_projection_parallel(&y, 4), build_projection(&y));
    }
}
