#![allow(dead_code)]

use std::sync::Arc;

use mids_core::{gnp, Graph, Instance, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PROBS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// Seeded random graph with `n` in `1..=max_n` and `p` from [`PROBS`].
pub fn random_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let p = PROBS[rng.gen_range(0..PROBS.len())];
    gnp(n, p, seed).unwrap()
}

/// Random graph with each vertex marked independently with probability `q`.
pub fn random_marked(seed: u64, max_n: usize, q: f64) -> Instance {
    let g = random_graph(seed ^ 0x9e37_79b9_7f4a_7c15, max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let n = g.n();
    let marked = VertexSet::from_iter_with_capacity(n, (0..n).filter(|_| rng.gen_bool(q)));
    Instance::with_marked(Arc::new(g), &marked)
}
