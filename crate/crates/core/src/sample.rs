//! Seeded random connected graphs for property sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

/// Reproducible sampler: a uniform random recursive spanning tree on a
/// shuffled vertex order, plus every other pair independently with
/// probability `density`.
pub struct GraphSampler {
    rng: ChaCha8Rng,
}

impl GraphSampler {
    pub fn new(seed: u64) -> Self {
        GraphSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn connected(&mut self, order: usize, density: f64) -> Graph {
        let mut perm: Vec<Vertex> = (0..order).collect();
        perm.shuffle(&mut self.rng);
        let mut adj = vec![vec![false; order]; order];
        for i in 1..order {
            let j = self.rng.gen_range(0..i);
            let (u, v) = (perm[i], perm[j]);
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                if adj[u][v] || self.rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(order, &edges).expect("spanning tree keeps the sample connected")
    }

    /// Order uniform in `min..=max`, density uniform in `[0.1, 0.7]`.
    pub fn next_graph(&mut self, min: usize, max: usize) -> Graph {
        let n = self.rng.gen_range(min..=max);
        let p = self.rng.gen_range(0.1..0.7);
        self.connected(n, p)
    }

    /// A random subset of `0..order` of size `1..=order`, sorted.
    pub fn subset(&mut self, order: usize) -> Vec<Vertex> {
        let k = self.rng.gen_range(1..=order);
        let mut all: Vec<Vertex> = (0..order).collect();
        all.shuffle(&mut self.rng);
        all.truncate(k);
        all.sort_unstable();
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_graphs() {
        let mut a = GraphSampler::new(7);
        let mut b = GraphSampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.next_graph(1, 9), b.next_graph(1, 9));
        }
    }
}
