use std::ops::Range;

use super::{EdgeList, NodeId};
use crate::error::{Error, Result};

/// Compressed sparse row adjacency with per-arc weights.
///
/// The arcs leaving node `u` are `targets[offsets[u]..offsets[u + 1]]`, with
/// matching entries in `weights`.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrGraph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    weights: Vec<f64>,
    directed: bool,
}

impl CsrGraph {
    /// Assembles a graph from raw arrays, checking every structural invariant.
    pub fn from_parts(
        n: usize,
        offsets: Vec<usize>,
        targets: Vec<NodeId>,
        weights: Vec<f64>,
        directed: bool,
    ) -> Result<Self> {
        if offsets.len() != n + 1 {
            return Err(Error::Validation(format!(
                "offsets has length {} but n + 1 = {}",
                offsets.len(),
                n + 1
            )));
        }
        if offsets[0] != 0 {
            return Err(Error::Validation("offsets[0] must be 0".into()));
        }
        if let Some(i) = offsets.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Validation(format!("offsets decrease at node {i}")));
        }
        if offsets[n] != targets.len() || targets.len() != weights.len() {
            return Err(Error::Validation(format!(
                "offsets[n] = {}, {} targets, {} weights",
                offsets[n],
                targets.len(),
                weights.len()
            )));
        }
        if let Some(t) = targets.iter().find(|&&t| t as usize >= n) {
            return Err(Error::Validation(format!("arc target {t} outside 0..{n}")));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite()) {
            return Err(Error::Validation(format!("non-finite arc weight {w}")));
        }
        Ok(CsrGraph {
            n,
            offsets,
            targets,
            weights,
            directed,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_arcs(&self) -> usize {
        self.targets.len()
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn targets(&self) -> &[NodeId] {
        &self.targets
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn arc_range(&self, u: usize) -> Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// `(target, weight)` pairs of the arcs leaving `u`, in storage order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        let r = self.arc_range(u);
        self.targets[r.clone()]
            .iter()
            .copied()
            .zip(self.weights[r].iter().copied())
    }

    /// Every arc as `(source, target, weight)`, grouped by source.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).map(move |(v, w)| (u as NodeId, v, w)))
    }
}

/// Builds CSR adjacency from an edge list by counting sort.
///
/// Undirected lists are stored symmetrically: each edge `(u, v, w)` yields the
/// arcs `u -> v` and `v -> u`, so the arc count is `2s`. Within a node's range,
/// arcs keep the order in which their edges appear in the list.
pub fn build_csr(el: &EdgeList) -> CsrGraph {
    let n = el.n();
    let edges = el.edges();
    let symmetric = !el.directed();
    let arc_count = if symmetric {
        2 * edges.len()
    } else {
        edges.len()
    };

    let mut offsets = vec![0usize; n + 1];
    for e in edges {
        offsets[e.src as usize + 1] += 1;
        if symmetric {
            offsets[e.dst as usize + 1] += 1;
        }
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }

    let mut cursor = offsets[..n].to_vec();
    let mut targets = vec![0 as NodeId; arc_count];
    let mut weights = vec![0.0f64; arc_count];
    let mut place = |from: NodeId, to: NodeId, w: f64| {
        let slot = &mut cursor[from as usize];
        targets[*slot] = to;
        weights[*slot] = w;
        *slot += 1;
    };
    for e in edges {
        place(e.src, e.dst, e.weight);
        if symmetric {
            place(e.dst, e.src, e.weight);
        }
    }

    CsrGraph {
        n,
        offsets,
        targets,
        weights,
        directed: el.directed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use proptest::prelude::*;

    fn chain(directed: bool) -> EdgeList {
        EdgeList::new(
            3,
            vec![Edge::new(0, 1, 1.0), Edge::new(1, 2, 1.0)],
            directed,
        )
        .unwrap()
    }

    #[test]
    fn directed_chain() {
        let g = build_csr(&chain(true));
        assert_eq!(g.offsets(), &[0, 1, 2, 2]);
        assert_eq!(g.targets(), &[1, 2]);
    }

    #[test]
    fn undirected_chain_is_mirrored() {
        let g = build_csr(&chain(false));
        assert_eq!(g.offsets(), &[0, 1, 3, 4]);
        assert_eq!(g.targets(), &[1, 0, 2, 1]);
        assert_eq!(g.num_arcs(), 4);
    }

    #[test]
    fn empty_graph() {
        let g = build_csr(&EdgeList::new(0, vec![], true).unwrap());
        assert_eq!(g.offsets(), &[0]);
        assert!(g.targets().is_empty());
    }

    #[test]
    fn from_parts_rejects_bad_offsets() {
        assert!(CsrGraph::from_parts(2, vec![0, 2, 1], vec![0], vec![1.0], true).is_err());
        assert!(CsrGraph::from_parts(1, vec![1, 1], vec![0], vec![1.0], true).is_err());
        assert!(CsrGraph::from_parts(1, vec![0, 1], vec![3], vec![1.0], true).is_err());
    }

    fn arb_edge_list() -> impl Strategy<Value = EdgeList> {
        (1usize..40, any::<bool>()).prop_flat_map(|(n, directed)| {
            prop::collection::vec((0..n as NodeId, 0..n as NodeId, 0.0f64..4.0), 0..200).prop_map(
                move |raw| {
                    let edges = raw.into_iter().map(Edge::from).collect();
                    EdgeList::new(n, edges, directed).unwrap()
                },
            )
        })
    }

    fn sorted(mut v: Vec<(NodeId, NodeId, u64)>) -> Vec<(NodeId, NodeId, u64)> {
        v.sort_unstable();
        v
    }

    proptest! {
        #[test]
        fn arcs_match_edge_multiset(el in arb_edge_list()) {
            let g = build_csr(&el);
            let offs = g.offsets();
            prop_assert_eq!(offs[0], 0);
            prop_assert!(offs.windows(2).all(|w| w[0] <= w[1]));
            prop_assert_eq!(offs[g.n()], g.num_arcs());

            let mut expected = Vec::new();
            for e in el.edges() {
                expected.push((e.src, e.dst, e.weight.to_bits()));
                if !el.directed() {
                    expected.push((e.dst, e.src, e.weight.to_bits()));
                }
            }
            let got = g.arcs().map(|(u, v, w)| (u, v, w.to_bits())).collect();
            prop_assert_eq!(sorted(got), sorted(expected));
        }
    }
}
