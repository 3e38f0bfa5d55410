//! Reference computations kept independent of the crate's encoder.
#![allow(dead_code)]

use std::collections::HashMap;

use gee::graph::{Edge, EdgeList, NodeId};
use gee::LabelVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `1 / |class|` for every labeled node, computed by direct tallying.
pub fn brute_force_w(labels: &[u32]) -> Vec<f64> {
    let mut tally: HashMap<u32, usize> = HashMap::new();
    for &l in labels {
        *tally.entry(l).or_default() += 1;
    }
    labels
        .iter()
        .map(|l| if *l == 0 { 0.0 } else { 1.0 / tally[l] as f64 })
        .collect()
}

/// Σ over edges of `w·W(v) + w·W(u)`: the total mass GEE must deposit in `Z`.
pub fn edge_mass(el: &EdgeList, labels: &[u32]) -> f64 {
    let w = brute_force_w(labels);
    el.edges()
        .iter()
        .map(|e| e.weight * w[e.dst as usize] + e.weight * w[e.src as usize])
        .sum()
}

/// A random weighted graph with weights in `(0, 2]`.
pub fn random_weighted_graph(n: usize, s: usize, directed: bool, seed: u64) -> EdgeList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..s)
        .map(|_| {
            let u = rng.gen_range(0..n) as NodeId;
            let v = rng.gen_range(0..n) as NodeId;
            let w = 2.0 * (1.0 - rng.gen::<f64>());
            Edge::new(u, v, w)
        })
        .collect();
    EdgeList::new(n, edges, directed).unwrap()
}

/// Two hubs of class 1 that both point at the same `leaves` nodes (also class
/// 1). Every leaf row then receives concurrent increments from both hubs'
/// workers into the same cell.
pub fn two_hub_graph(leaves: usize) -> (EdgeList, LabelVector) {
    let n = leaves + 2;
    let mut edges = Vec::with_capacity(2 * leaves);
    for hub in 0..2u32 {
        for leaf in 0..leaves {
            edges.push(Edge::new(hub, (leaf + 2) as NodeId, 1.0));
        }
    }
    let el = EdgeList::new(n, edges, true).unwrap();
    let y = LabelVector::new(vec![1; n], 1).unwrap();
    (el, y)
}
