use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// PRNG used by [`random_cactus`] and [`random_graph`]; recorded in report
/// metadata.
pub const CACTUS_RNG: &str = "chacha8-v1";

/// `G(n, p)`: each pair is an edge independently with probability `p`.
pub fn random_graph(seed: u64, n: usize, edge_prob: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are simple")
}

/// A connected cactus grown by attaching `block_count` blocks, each either a
/// bridge or a cycle of length `3..=max_cycle_len`, at uniformly chosen
/// existing vertices.
pub fn random_cactus(seed: u64, block_count: usize, max_cycle_len: usize) -> Graph {
    assert!(block_count >= 1 && max_cycle_len >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 1;
    let mut edges = Vec::new();
    for _ in 0..block_count {
        let anchor = rng.gen_range(0..n);
        // length 2 is a bridge
        let len = rng.gen_range(2..=max_cycle_len);
        let mut prev = anchor;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        if len >= 3 {
            edges.push((prev, anchor));
        }
    }
    Graph::new(n, &edges).expect("cactus edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_decomposition, components};

    #[test]
    fn random_graph_is_deterministic() {
        assert_eq!(random_graph(3, 9, 0.4), random_graph(3, 9, 0.4));
        assert_eq!(random_graph(3, 9, 0.0).edge_count(), 0);
        assert_eq!(random_graph(3, 9, 1.0).edge_count(), 36);
    }

    #[test]
    fn single_block() {
        let g = random_cactus(1, 1, 5);
        let bd = block_decomposition(&g);
        assert!(bd.is_cactus && bd.b() == 1);
    }

    #[test]
    fn five_blocks() {
        let g = random_cactus(7, 5, 6);
        let bd = block_decomposition(&g);
        assert!(bd.is_cactus);
        assert_eq!(bd.b(), 5);
        assert_eq!(components(&g).len(), 1);
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_cactus(42, 6, 5), random_cactus(42, 6, 5));
    }

    #[test]
    fn many_seeds_are_cacti() {
        for seed in 0..200 {
            let g = random_cactus(seed, 1 + (seed as usize % 6), 3 + (seed as usize % 4));
            let bd = block_decomposition(&g);
            assert!(bd.is_cactus, "seed {seed}");
            assert_eq!(bd.b(), 1 + (seed as usize % 6), "seed {seed}");
        }
    }
}
