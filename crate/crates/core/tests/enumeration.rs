mod common;

use mids_core::mis::brute_force_maximal_sets;
use mids_core::{enumerate_all, enumerate_bounded, named, oracle_opt, Family, Instance};
use std::sync::Arc;

#[test]
fn matches_brute_force() {
    for seed in 0..200 {
        let g = common::random_graph(seed, 13);
        let all = enumerate_all(&g);
        assert_eq!(all, brute_force_maximal_sets(&g), "seed {seed}");
        assert!((all.len() as f64) <= 3f64.powf(g.n() as f64 / 3.0) + 1e-9);
        let min = all.iter().map(|s| s.len()).min();
        assert_eq!(min, oracle_opt(&Instance::new(Arc::new(g))).size());
    }
}

#[test]
fn budget_filters_full_list() {
    for seed in 0..100 {
        let g = common::random_graph(seed, 12);
        let all = enumerate_all(&g);
        for s in 0..=g.n() {
            let want: Vec<_> = all.iter().filter(|x| x.len() <= s).cloned().collect();
            assert_eq!(enumerate_bounded(&g, s), want, "seed {seed} s {s}");
        }
    }
}

#[test]
fn triangle_unions_meet_moon_moser() {
    for k in 1..=5 {
        let g = named(Family::Triangles, &[k]).unwrap();
        assert_eq!(enumerate_all(&g).len(), 3usize.pow(k as u32));
    }
}
