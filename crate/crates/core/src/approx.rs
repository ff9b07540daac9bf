//! Exponential-time approximation with a tunable ratio.
//!
//! Both algorithms first enumerate every maximal independent set of size at
//! most `⌊n/r⌋`; if one exists, the smallest is optimal. Otherwise
//! `opt > n/r`.
//!
//! * [`approx_fixed_r`] then returns one greedy maximal independent set,
//!   which has at most `n < r·opt` vertices.
//! * [`approx_partition`] also tries, for every window `V_j` of
//!   `L = ⌈n·log₂r/r⌉` consecutive ids (cyclically) and every independent
//!   `H ⊆ V_j`, the set `H ∪ greedy(V \ N[H])`. Windows start every
//!   `gcd(n, L)` ids, so each vertex lies in the same number of windows and
//!   some window meets an optimum `S*` in a set `H` whose open neighborhood
//!   holds at least `(n - opt)·L/n` vertices. That yields the ratio
//!   `r - ((r-1)/r)·log₂r`.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::ParamError;
use crate::graph::{closed_neighborhood_of_set, Graph};
use crate::instance::Solution;
use crate::mis::for_each_bounded;

#[derive(Clone, Debug, Serialize)]
pub struct ApproxReport {
    #[serde(skip)]
    pub solution: Solution,
    /// The enumeration phase found a set, so it is a minimum one.
    pub certified_optimal: bool,
    pub r_internal: f64,
    pub ratio_bound: f64,
    pub enumeration_nodes: u64,
    /// Windows scanned by the second phase of [`approx_partition`].
    pub blocks: Option<usize>,
    /// Independent sets `H` tried by the second phase.
    pub subsets_tried: u64,
}

impl ApproxReport {
    pub fn vertices(&self) -> &VertexSet {
        self.solution
            .vertices()
            .expect("approximations are always feasible")
    }

    pub fn size(&self) -> usize {
        self.vertices().len()
    }
}

/// A maximal independent set of `g - excluded`, built by repeatedly taking a
/// vertex of minimum remaining degree (lowest id on ties) and deleting its
/// closed neighborhood.
pub fn greedy_ids(g: &Graph, excluded: &VertexSet) -> VertexSet {
    let mut rest = g.vertices().difference(excluded);
    let mut out = VertexSet::new(g.n());
    while let Some(v) = rest.iter().min_by_key(|&v| (g.degree_in(v, &rest), v)) {
        out.insert(v);
        rest.difference_with(g.neighbors(v));
        rest.remove(v);
    }
    out
}

/// `r - ((r-1)/r)·log₂r`, the ratio guaranteed by [`approx_partition`].
pub fn ratio_of_r(r: f64) -> f64 {
    r - (r - 1.0) / r * r.log2()
}

/// The `r ≥ 3` at which [`ratio_of_r`] equals `rho`, found by bisection.
pub fn r_of_ratio(rho: f64) -> Result<f64, ParamError> {
    let min = ratio_of_r(3.0);
    if rho.is_nan() || rho < min {
        return Err(ParamError::RatioTooSmall { target: rho, min });
    }
    let (mut lo, mut hi) = (3.0, 10.0 * rho);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if ratio_of_r(mid) < rho {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn check_r(r: f64) -> Result<(), ParamError> {
    if r >= 3.0 && r.is_finite() {
        Ok(())
    } else {
        Err(ParamError::RBelowThree(r))
    }
}

/// Smallest maximal independent set of size at most `⌊n/r⌋`, if any.
fn small_optimum(g: &Graph, r: f64) -> (Option<VertexSet>, u64) {
    let bound = (g.n() as f64 / r).floor() as usize;
    let mut best: Option<VertexSet> = None;
    let stats = for_each_bounded(g, bound, |s| {
        if best.as_ref().is_none_or(|b| s.cmp_size_lex(b).is_lt()) {
            best = Some(s.clone());
        }
        ControlFlow::Continue(())
    });
    (best, stats.nodes)
}

/// r-approximation in time `O*(2^{n·log₂r/r})`.
pub fn approx_fixed_r(g: &Graph, r: f64) -> Result<ApproxReport, ParamError> {
    check_r(r)?;
    let (found, nodes) = small_optimum(g, r);
    let certified = found.is_some();
    let set = found.unwrap_or_else(|| greedy_ids(g, &VertexSet::new(g.n())));
    Ok(ApproxReport {
        solution: Solution::Feasible(set),
        certified_optimal: certified,
        r_internal: r,
        ratio_bound: r,
        enumeration_nodes: nodes,
        blocks: None,
        subsets_tried: 0,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Window length and start positions for [`approx_partition`].
pub fn windows(n: usize, r: f64) -> (usize, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    let len = ((n as f64 * r.log2() / r).ceil() as usize).clamp(1, n);
    let step = gcd(n, len);
    (len, (0..n).step_by(step).collect())
}

/// Best `H ∪ greedy(V \ N[H])` over independent `H` inside one window,
/// in the order the subsets are generated; ties keep the earlier one.
fn best_in_window(g: &Graph, window: &[usize]) -> (Option<VertexSet>, u64) {
    fn walk(
        g: &Graph,
        window: &[usize],
        i: usize,
        h: &mut VertexSet,
        best: &mut Option<VertexSet>,
        tried: &mut u64,
    ) {
        if i == window.len() {
            *tried += 1;
            let mut cand = greedy_ids(g, &closed_neighborhood_of_set(g, h));
            cand.union_with(h);
            if best.as_ref().is_none_or(|b| cand.len() < b.len()) {
                *best = Some(cand);
            }
            return;
        }
        walk(g, window, i + 1, h, best, tried);
        let v = window[i];
        if !g.neighbors(v).intersects(h) {
            h.insert(v);
            walk(g, window, i + 1, h, best, tried);
            h.remove(v);
        }
    }
    let mut best = None;
    let mut tried = 0;
    walk(
        g,
        window,
        0,
        &mut VertexSet::new(g.n()),
        &mut best,
        &mut tried,
    );
    (best, tried)
}

/// Approximation with ratio `r - ((r-1)/r)·log₂r` in time
/// `O*(2^{n·log₂r/r})`.
pub fn approx_partition(g: &Graph, r: f64) -> Result<ApproxReport, ParamError> {
    check_r(r)?;
    let n = g.n();
    let (found, nodes) = small_optimum(g, r);
    if let Some(set) = found {
        return Ok(ApproxReport {
            solution: Solution::Feasible(set),
            certified_optimal: true,
            r_internal: r,
            ratio_bound: ratio_of_r(r),
            enumeration_nodes: nodes,
            blocks: Some(0),
            subsets_tried: 0,
        });
    }

    let (len, starts) = windows(n, r);
    let per_window: Vec<_> = starts
        .par_iter()
        .map(|&s| {
            let window: Vec<usize> = (0..len).map(|i| (s + i) % n).collect();
            best_in_window(g, &window)
        })
        .collect();

    let mut best = greedy_ids(g, &VertexSet::new(n));
    let mut tried = 0;
    for (cand, t) in per_window {
        tried += t;
        if let Some(c) = cand {
            if c.len() < best.len() {
                best = c;
            }
        }
    }
    Ok(ApproxReport {
        solution: Solution::Feasible(best),
        certified_optimal: false,
        r_internal: r,
        ratio_bound: ratio_of_r(r),
        enumeration_nodes: nodes,
        blocks: Some(starts.len()),
        subsets_tried: tried,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, Family};
    use crate::graph::verify_solution;

    #[test]
    fn greedy_examples() {
        let c5 = named(Family::Cycle, &[5]).unwrap();
        assert_eq!(greedy_ids(&c5, &VertexSet::new(5)).len(), 2);
        let k14 = named(Family::Star, &[5]).unwrap();
        assert_eq!(
            greedy_ids(&k14, &VertexSet::new(5)).to_vec(),
            vec![1, 2, 3, 4]
        );
        let e3 = Graph::empty(3);
        assert_eq!(greedy_ids(&e3, &VertexSet::new(3)).len(), 3);
    }

    #[test]
    fn fixed_r_examples() {
        let k18 = named(Family::Star, &[9]).unwrap();
        let rep = approx_fixed_r(&k18, 3.0).unwrap();
        assert!(rep.certified_optimal);
        assert_eq!(rep.vertices().to_vec(), vec![0]);

        let c5 = named(Family::Cycle, &[5]).unwrap();
        let rep = approx_fixed_r(&c5, 3.0).unwrap();
        assert!(!rep.certified_optimal);
        assert_eq!(rep.size(), 2);
        assert_eq!(
            approx_fixed_r(&c5, 2.5).unwrap_err(),
            ParamError::RBelowThree(2.5)
        );
    }

    #[test]
    fn partition_on_c5() {
        let c5 = named(Family::Cycle, &[5]).unwrap();
        let rep = approx_partition(&c5, 3.0).unwrap();
        assert_eq!(rep.size(), 2);
        assert!(verify_solution(&c5, rep.vertices()).is_valid());
        assert_eq!(rep.blocks, Some(5));
    }

    #[test]
    fn windows_cover_uniformly() {
        for n in 1..40 {
            for r in [3.0, 4.0, 5.5, 10.0] {
                let (len, starts) = windows(n, r);
                let mut hits = vec![0; n];
                for s in &starts {
                    for i in 0..len {
                        hits[(s + i) % n] += 1;
                    }
                }
                assert!(hits.iter().all(|&h| h == hits[0]), "n={n} r={r}");
                assert!(len as f64 >= n as f64 * f64::log2(r) / r);
            }
        }
    }

    #[test]
    fn ratio_inverse() {
        let r = r_of_ratio(3.0).unwrap();
        assert!((ratio_of_r(r) - 3.0).abs() < 1e-9);
        let r2 = r_of_ratio(2.0).unwrap();
        assert!((r2 - 3.11).abs() < 5e-3);
        assert!((r2.powf(1.0 / r2) - 1.4403).abs() < 1e-3);
        let r5 = r_of_ratio(5.0).unwrap();
        assert!((r5.powf(1.0 / r5) - 1.3077).abs() < 1e-3);
        assert!(matches!(
            r_of_ratio(1.5),
            Err(ParamError::RatioTooSmall { .. })
        ));
    }
}
