use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Edge, EdgeList, NodeId};
use crate::error::{Error, Result};

/// Samples a directed Erdős–Rényi `G(n, s)` multigraph.
///
/// Each of the `s` edges draws both endpoints independently and uniformly from
/// `0..n`. Duplicates and self-loops are kept, so generation is `O(s)`. The
/// same `(n, s, seed)` always yields the same edge sequence.
pub fn generate_erdos_renyi(n: usize, s: usize, seed: u64) -> Result<EdgeList> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "Erdős–Rényi graph needs n >= 1".into(),
        ));
    }
    if n > NodeId::MAX as usize + 1 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the node id range"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let endpoint = Uniform::new_inclusive(0, (n - 1) as NodeId);
    let edges = (0..s)
        .map(|_| {
            let u = endpoint.sample(&mut rng);
            let v = endpoint.sample(&mut rng);
            Edge::new(u, v, 1.0)
        })
        .collect();
    Ok(EdgeList::from_parts_unchecked(n, edges, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_edges() {
        let el = generate_erdos_renyi(10, 0, 7).unwrap();
        assert_eq!(el.n(), 10);
        assert!(el.is_empty());
    }

    #[test]
    fn single_node_only_self_loops() {
        let el = generate_erdos_renyi(1, 5, 1).unwrap();
        assert_eq!(el.edges(), &[Edge::new(0, 0, 1.0); 5]);
    }

    #[test]
    fn zero_nodes_rejected() {
        assert!(generate_erdos_renyi(0, 3, 1).is_err());
    }

    #[test]
    fn reproducible_and_seed_sensitive() {
        let a = generate_erdos_renyi(500, 2000, 11).unwrap();
        let b = generate_erdos_renyi(500, 2000, 11).unwrap();
        let c = generate_erdos_renyi(500, 2000, 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.directed());
    }

    #[test]
    fn endpoint_mean_is_uniform() {
        // 2s independent uniform draws on 0..n: mean (n-1)/2, variance (n^2-1)/12.
        let (n, s) = (1000usize, 100_000usize);
        let el = generate_erdos_renyi(n, s, 42).unwrap();
        let draws = 2 * s;
        let sum: f64 = el.edges().iter().map(|e| e.src as f64 + e.dst as f64).sum();
        let mean = sum / draws as f64;
        let sd = (((n * n - 1) as f64) / 12.0).sqrt();
        let se = sd / (draws as f64).sqrt();
        assert!(
            (mean - 499.5).abs() < 3.0 * se,
            "mean {mean}, 3 SE = {}",
            3.0 * se
        );
    }
}
