//! Fixed workloads shared by the criterion benches.

use mids_core::{gnp, Graph};

/// Random graphs `G(n, p)` for every size and seed, in that nesting order.
pub fn gnp_suite(sizes: &[usize], p: f64, seeds: std::ops::Range<u64>) -> Vec<(usize, u64, Graph)> {
    sizes
        .iter()
        .flat_map(|&n| {
            seeds
                .clone()
                .map(move |s| (n, s, gnp(n, p, s).expect("valid probability")))
        })
        .collect()
}
