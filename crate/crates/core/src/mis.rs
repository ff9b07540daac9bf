//! Maximal independent sets: bounded enumeration and a brute-force oracle.
//!
//! The enumerator branches on the alive vertex `v` whose closed neighborhood
//! holds the fewest eligible vertices. Every maximal independent set meets
//! `N[v]`, so branch `i` takes the `i`-th eligible vertex `u_i` of `N[v]` and
//! forbids `u_1..u_{i-1}`. A set is found only in the branch of its first
//! member in that order, so nothing is emitted twice.
//!
//! The oracle shares no code with the enumerator: it scans subsets of the
//! free vertices in increasing size as `u64` masks.

use std::ops::ControlFlow;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::instance::{Instance, Solution};

/// Work done by one enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Recursion nodes, the root included.
    pub nodes: u64,
    pub emitted: u64,
    /// The callback asked to stop before the search finished.
    pub stopped: bool,
}

struct Enumerator<'a, F> {
    g: &'a Graph,
    emit: F,
    stats: EnumStats,
}

impl<F> Enumerator<'_, F>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    fn run(
        &mut self,
        alive: &VertexSet,
        forbidden: &VertexSet,
        chosen: &mut VertexSet,
        budget: usize,
    ) -> ControlFlow<()> {
        self.stats.nodes += 1;
        if alive.is_empty() {
            self.stats.emitted += 1;
            return (self.emit)(chosen);
        }
        if budget == 0 {
            return ControlFlow::Continue(());
        }
        let eligible = alive.difference(forbidden);
        let mut pick: Option<(usize, VertexSet)> = None;
        for v in alive.iter() {
            let mut cands = self.g.neighbors(v).intersection(&eligible);
            if eligible.contains(v) {
                cands.insert(v);
            }
            if pick
                .as_ref()
                .is_none_or(|(_, best)| cands.len() < best.len())
            {
                let empty = cands.is_empty();
                pick = Some((v, cands));
                if empty {
                    break;
                }
            }
        }
        let (_, cands) = pick.expect("alive is nonempty");
        let mut order = cands.to_vec();
        order.sort_by_key(|&u| (self.g.degree_in(u, alive), u));

        let mut forbidden = forbidden.clone();
        for u in order {
            let mut rest = alive.difference(self.g.neighbors(u));
            rest.remove(u);
            chosen.insert(u);
            let flow = self.run(&rest, &forbidden, chosen, budget - 1);
            chosen.remove(u);
            flow?;
            forbidden.insert(u);
        }
        ControlFlow::Continue(())
    }
}

/// Streams every maximal independent set of size at most `s` to `emit`,
/// which may stop the search early by returning `Break`.
pub fn for_each_bounded<F>(g: &Graph, s: usize, emit: F) -> EnumStats
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let mut e = Enumerator {
        g,
        emit,
        stats: EnumStats::default(),
    };
    let n = g.n();
    let flow = e.run(
        &VertexSet::full(n),
        &VertexSet::new(n),
        &mut VertexSet::new(n),
        s,
    );
    e.stats.stopped = flow.is_break();
    e.stats
}

/// Maximal independent sets of size at most `s`, sorted by size then
/// lexicographically, with the enumeration's work counters.
pub fn enumerate_bounded_with_stats(g: &Graph, s: usize) -> (Vec<VertexSet>, EnumStats) {
    let mut out = Vec::new();
    let stats = for_each_bounded(g, s, |set| {
        out.push(set.clone());
        ControlFlow::Continue(())
    });
    out.sort_by(|a, b| a.cmp_size_lex(b));
    (out, stats)
}

pub fn enumerate_bounded(g: &Graph, s: usize) -> Vec<VertexSet> {
    enumerate_bounded_with_stats(g, s).0
}

pub fn enumerate_all(g: &Graph) -> Vec<VertexSet> {
    enumerate_bounded(g, g.n())
}

const ORACLE_MAX_N: usize = 64;

fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Exact optimum of a marked/free instance by exhaustive search.
///
/// Looks for the smallest set `T` of free vertices that is independent and
/// dominates every alive vertex, then returns `chosen ∪ T`. Among optima of
/// equal size the lexicographically smallest is returned. Works on the
/// original adjacency, so edges dropped inside `inst` do not matter.
pub fn oracle_opt(inst: &Instance) -> Solution {
    let g = inst.graph();
    let n = g.n();
    assert!(
        n <= ORACLE_MAX_N,
        "oracle supports at most {ORACLE_MAX_N} vertices"
    );
    let cands = inst.free().to_vec();
    let alive = mask_of(inst.alive());
    let closed: Vec<u64> = cands
        .iter()
        .map(|&v| mask_of(g.neighbors(v)) | 1 << v)
        .collect();
    let open: Vec<u64> = cands.iter().map(|&v| mask_of(g.neighbors(v))).collect();

    let c = cands.len();
    for k in 0..=c {
        let mut best: Option<VertexSet> = None;
        let mut pick: u64 = if k == 0 { 0 } else { u64::MAX >> (64 - k) };
        loop {
            let mut covered = 0u64;
            let mut members = 0u64;
            let mut independent = true;
            let mut bits = pick;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if open[i] & members != 0 {
                    independent = false;
                    break;
                }
                members |= 1 << cands[i];
                covered |= closed[i];
            }
            if independent && alive & !covered == 0 {
                let set = VertexSet::from_iter_with_capacity(
                    n,
                    (0..n).filter(|&v| members >> v & 1 == 1),
                );
                if best.as_ref().is_none_or(|b| set.cmp_size_lex(b).is_lt()) {
                    best = Some(set);
                }
            }
            if k == 0 || k == c {
                break;
            }
            pick = next_combination(pick);
            if pick >> c != 0 {
                break;
            }
        }
        if let Some(mut s) = best {
            s.union_with(inst.chosen());
            return Solution::Feasible(s);
        }
    }
    Solution::Infeasible
}

/// Every maximal independent set of `g` by scanning all `2^n` subsets,
/// sorted by size then lexicographically.
pub fn brute_force_maximal_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(
        n < ORACLE_MAX_N,
        "brute force supports fewer than {ORACLE_MAX_N} vertices"
    );
    let closed: Vec<u64> = (0..n).map(|v| mask_of(g.neighbors(v)) | 1 << v).collect();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut out = Vec::new();
    for s in 0..=full {
        let mut covered = 0u64;
        let mut ok = true;
        for v in (0..n).filter(|&v| s >> v & 1 == 1) {
            if closed[v] & s != 1 << v {
                ok = false;
                break;
            }
            covered |= closed[v];
        }
        if ok && covered == full {
            out.push(VertexSet::from_iter_with_capacity(
                n,
                (0..n).filter(|&v| s >> v & 1 == 1),
            ));
        }
    }
    out.sort_by(|a, b| a.cmp_size_lex(b));
    out
}
