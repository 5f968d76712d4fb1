//! Seeded Erdős–Rényi G(n, p) graphs.
//!
//! All randomness flows from `ChaCha8Rng::seed_from_u64(seed)`, so a
//! `(n, p, seed, count)` tuple always names the same sequence of graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Name of the generator, printed alongside seeds for reproduction.
pub const GENERATOR: &str = "chacha8";

/// One G(n, p) sample; pairs are visited in `(u, v)` lexicographic order.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are simple")
}

/// `count` consecutive samples from a single seeded stream.
pub fn gnp_graphs(n: usize, p: f64, seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| gnp(n, p, &mut rng)).collect()
}

/// First connected sample from the seeded stream, with the number of draws it took.
pub fn connected_gnp(n: usize, p: f64, seed: u64) -> (Graph, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = 0;
    loop {
        draws += 1;
        let g = gnp(n, p, &mut rng);
        if g.is_connected() {
            return (g, draws);
        }
    }
}
