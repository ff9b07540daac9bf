//! Branching rules.
//!
//! Dispatch order, on a fully reduced instance:
//!
//! 1. a marked vertex of degree 2 (L2),
//! 2. a free vertex with exactly one free neighbor (L3),
//! 3. a marked vertex of degree 3 (L4),
//! 4. otherwise a vertex of minimum degree δ over all alive vertices:
//!    δ = 2 (L5), δ = 3 (L6), δ = 4 (L7), δ ≥ 5 (L1).
//!
//! Most rules are a sequential exclusion over the free part of `N[v]`:
//! branch `i` takes candidate `i` and marks candidates `1..i`. Every branch
//! is then completed: a marked vertex left with one free neighbor forces that
//! neighbor into the take set, and one left with none kills the branch.
//!
//! Each branch carries the smallest measure drop its rule guarantees; the
//! solver compares it against the drop it actually observes.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::exact::measure::MARKED_DEGREE3_WEIGHT as W;
use crate::instance::{min_degree_alive_vertex, Instance};
use crate::reductions::{applicable_rule, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Lemma {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
}

/// Rule cases whose guaranteed drop is below the lemma's headline minimum.
/// Both are mark-only branches that the analysis follows up with a further
/// branching on the freshly created low-degree marked vertex.
pub const INTERMEDIATE_CASES: [&str; 2] = ["L4.2", "L6.2a-gamma3"];

#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub take: VertexSet,
    /// Free vertices switched to marked; never intersects `N[take]`.
    pub mark: VertexSet,
    pub min_decrement: f64,
    /// Set for the mark-only branches listed in [`INTERMEDIATE_CASES`].
    pub intermediate: bool,
}

impl Branch {
    pub fn apply(&self, inst: &Instance) -> Instance {
        let mut child = inst.clone();
        child.mark_all(&self.mark);
        child.take_all(&self.take);
        child
    }
}

#[derive(Clone, Debug)]
pub struct BranchingPlan {
    pub source: Lemma,
    pub case: &'static str,
    /// The vertex the rule was selected for.
    pub pivot: usize,
    pub branches: Vec<Branch>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PlanError {
    #[error("instance is not reduced: rule {0:?} still applies")]
    Reducible(Rule),
    #[error("no alive vertex left to branch on")]
    Empty,
}

/// Builds the branching plan for a reduced instance.
pub fn select_branching(inst: &Instance) -> Result<BranchingPlan, PlanError> {
    if let Some(rule) = applicable_rule(inst) {
        return Err(PlanError::Reducible(rule));
    }
    if inst.alive().is_empty() {
        return Err(PlanError::Empty);
    }
    Ok(plan_reduced(inst))
}

/// [`select_branching`] without the reducibility check.
pub(crate) fn plan_reduced(inst: &Instance) -> BranchingPlan {
    let marked = inst.marked();
    if let Some(v) = marked.iter().find(|&v| inst.degree(v) == 2) {
        return lemma2(inst, v);
    }
    if let Some(v) = inst.free().iter().find(|&v| inst.free_degree(v) == 1) {
        return lemma3(inst, v);
    }
    if let Some(v) = marked.iter().find(|&v| inst.degree(v) == 3) {
        return lemma4(inst, v);
    }
    let v = min_degree_alive_vertex(inst).expect("nonempty instance");
    match inst.degree(v) {
        2 => lemma5(inst, v),
        3 => lemma6(inst, v),
        4 => lemma7(inst, v),
        _ => lemma1(inst, v),
    }
}

struct Planner<'a> {
    inst: &'a Instance,
    source: Lemma,
    case: &'static str,
    pivot: usize,
    branches: Vec<Branch>,
}

impl<'a> Planner<'a> {
    fn new(inst: &'a Instance, source: Lemma, case: &'static str, pivot: usize) -> Self {
        Planner {
            inst,
            source,
            case,
            pivot,
            branches: Vec::new(),
        }
    }

    fn set(&self, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.inst.n(), vs.iter().copied())
    }

    /// Adds the branch "take `take`, mark `mark`" after completion.
    /// Returns whether the branch survived.
    fn push(&mut self, take: VertexSet, mark: VertexSet, min_decrement: f64) -> bool {
        let intermediate = take.is_empty();
        match complete(self.inst, take, mark) {
            Some((take, mark)) => {
                self.branches.push(Branch {
                    take,
                    mark,
                    min_decrement,
                    intermediate,
                });
                true
            }
            None => false,
        }
    }

    /// Sequential exclusion over `candidates`. A candidate may bring
    /// companions that must be taken with it; if a companion cannot be
    /// taken the branch is dropped, but the candidate is still excluded from
    /// later branches.
    fn sequential(&mut self, candidates: &[(usize, Vec<usize>)], min_decrement: f64) {
        let mut excluded = VertexSet::new(self.inst.n());
        for (c, companions) in candidates {
            let mut take = self.set(&[*c]);
            let mut ok = true;
            for &t in companions {
                let clash = !self.inst.is_free(t)
                    || take.contains(t)
                    || self.inst.row(t).intersects(&take)
                    || excluded.contains(t);
                if clash {
                    ok = false;
                    break;
                }
                take.insert(t);
            }
            if ok {
                self.push(take, excluded.clone(), min_decrement);
            }
            excluded.insert(*c);
        }
    }

    fn finish(self) -> BranchingPlan {
        BranchingPlan {
            source: self.source,
            case: self.case,
            pivot: self.pivot,
            branches: self.branches,
        }
    }
}

/// Closes a branch under the forcing argument: any marked vertex outside
/// `N[take]` needs a free neighbor outside `N[take]`. None left means the
/// branch is infeasible; exactly one means that neighbor must be taken.
fn complete(
    inst: &Instance,
    mut take: VertexSet,
    mark: VertexSet,
) -> Option<(VertexSet, VertexSet)> {
    loop {
        let removed = inst.closed_neighborhood_of_set(&take);
        let mut free_after = inst.free().difference(&removed);
        free_after.difference_with(&mark);
        let mut marked_after = inst.alive().difference(&removed);
        marked_after.difference_with(&free_after);

        let mut forced = None;
        for x in marked_after.iter() {
            let options = inst.row(x).intersection_len(&free_after);
            match options {
                0 => return None,
                1 => {
                    forced = inst.row(x).intersection(&free_after).first();
                    break;
                }
                _ => {}
            }
        }
        match forced {
            Some(t) => {
                take.insert(t);
            }
            None => {
                let mark = mark.difference(&removed);
                return Some((take, mark));
            }
        }
    }
}

/// Free vertices of `N[v]`: `v` first, then neighbors by increasing degree.
fn closed_candidates(inst: &Instance, v: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    if inst.is_free(v) {
        out.push((v, vec![]));
    }
    out.extend(
        sorted_neighbors(inst, v)
            .into_iter()
            .filter(|&u| inst.is_free(u))
            .map(|u| (u, vec![])),
    );
    out
}

fn sorted_neighbors(inst: &Instance, v: usize) -> Vec<usize> {
    let mut ns = inst.neighbors(v).to_vec();
    ns.sort_by_key(|&u| (inst.degree(u), u));
    ns
}

fn generic(
    inst: &Instance,
    source: Lemma,
    case: &'static str,
    v: usize,
    min_decrement: f64,
) -> BranchingPlan {
    let mut p = Planner::new(inst, source, case, v);
    p.sequential(&closed_candidates(inst, v), min_decrement);
    p.finish()
}

/// Marked `v` of degree 2: one of its two free neighbors must be taken.
fn lemma2(inst: &Instance, v: usize) -> BranchingPlan {
    let mut ns = inst.neighbors(v).to_vec();
    ns.sort_by_key(|&u| (inst.free_degree(u), inst.degree(u), u));
    let cands: Vec<_> = ns.into_iter().map(|u| (u, vec![])).collect();
    let mut p = Planner::new(inst, Lemma::L2, "L2", v);
    p.sequential(&cands, 2.0);
    p.finish()
}

/// Free `v` whose only free neighbor is `u`: take `v` or take `u`.
fn lemma3(inst: &Instance, v: usize) -> BranchingPlan {
    let u = inst.free_neighbors(v).first().expect("one free neighbor");
    let mut p = Planner::new(inst, Lemma::L3, "L3", v);
    p.sequential(&[(v, vec![]), (u, vec![])], 2.0);
    p.finish()
}

/// Marked `v` of degree 3.
fn lemma4(inst: &Instance, v: usize) -> BranchingPlan {
    let mut ns = inst.neighbors(v).to_vec();
    ns.sort_by_key(|&u| (inst.free_degree(u), u));
    if inst.free_degree(ns[0]) >= 3 {
        let cands: Vec<_> = ns.into_iter().map(|u| (u, vec![])).collect();
        let mut p = Planner::new(inst, Lemma::L4, "L4.1", v);
        p.sequential(&cands, 3.0 + W);
        return p.finish();
    }
    // ns[0] has exactly two free neighbors: take it or mark it.
    let u = ns[0];
    let mut p = Planner::new(inst, Lemma::L4, "L4.2", v);
    let single = p.set(&[u]);
    let none = VertexSet::new(inst.n());
    p.push(single.clone(), none.clone(), 3.0 + W);
    p.push(none, single, 1.0 + W);
    p.finish()
}

/// Minimum degree 2, `N(v) = {a, b}` with `d(a) <= d(b)`.
fn lemma5(inst: &Instance, v: usize) -> BranchingPlan {
    let ns = sorted_neighbors(inst, v);
    let (a, b) = (ns[0], ns[1]);
    let (da, db) = (inst.degree(a), inst.degree(b));
    let both_free = inst.is_free(v) && inst.is_free(a) && inst.is_free(b);
    if both_free && da == 3 && db == 3 && inst.adjacent(a, b) {
        // Taking v without a's third neighbor t is never better than taking a.
        let t = inst
            .neighbors(a)
            .to_vec()
            .into_iter()
            .find(|&x| x != v && x != b);
        if let Some(t) = t {
            let mut p = Planner::new(inst, Lemma::L5, "L5.3", v);
            p.sequential(&[(v, vec![t]), (a, vec![]), (b, vec![])], 3.0);
            return p.finish();
        }
    }
    let case = match (da, db) {
        (3.., 4..) => "L5.1",
        (2, 4..) => "L5.2",
        _ => "L5.4",
    };
    generic(inst, Lemma::L5, case, v, 3.0)
}

/// Minimum degree 3, `N(v) = {a, b, c}` sorted by degree.
fn lemma6(inst: &Instance, v: usize) -> BranchingPlan {
    const MIN: f64 = 4.0;
    let ns = sorted_neighbors(inst, v);
    if !inst.is_free(v) || ns.iter().any(|&u| !inst.is_free(u)) {
        return generic(inst, Lemma::L6, "L6.marked", v, MIN);
    }
    if inst.degree(ns[0]) >= 4 {
        return generic(inst, Lemma::L6, "L6.high", v, MIN);
    }
    let pairs = [(ns[0], ns[1]), (ns[0], ns[2]), (ns[1], ns[2])];
    let inner: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(x, y)| inst.adjacent(x, y))
        .collect();

    if inner.len() == 2 {
        // The shared endpoint of the two inner edges.
        let center = ns
            .iter()
            .copied()
            .find(|&x| inner.iter().all(|&(p, q)| p == x || q == x))
            .expect("two edges on three vertices share an endpoint");
        if inst.degree(center) == 4 {
            let t = inst
                .neighbors(center)
                .difference(&inst.closed_neighborhood(v))
                .first();
            if let Some(t) = t {
                let mut cands = closed_candidates(inst, v);
                cands[0].1.push(t);
                let mut p = Planner::new(inst, Lemma::L6, "L6.1b", v);
                p.sequential(&cands, MIN);
                return p.finish();
            }
        }
        return generic(inst, Lemma::L6, "L6.1a", v, MIN);
    }

    if inner.len() == 1 {
        let (x, y) = inner[0];
        if inst.degree(x) == 3 && inst.degree(y) == 3 {
            return triangle(
                inst,
                v,
                x,
                y,
                ns.iter().copied().find(|&z| z != x && z != y).unwrap(),
            );
        }
        return generic(inst, Lemma::L6, "L6.2bc", v, MIN);
    }
    generic(
        inst,
        Lemma::L6,
        if inner.is_empty() { "L6.3" } else { "L6.other" },
        v,
        MIN,
    )
}

/// `v, x, y` form a triangle of degree-3 vertices; `r` is v's third neighbor.
fn triangle(inst: &Instance, v: usize, x: usize, y: usize, r: usize) -> BranchingPlan {
    const MIN: f64 = 4.0;
    let third = |a: usize, b: usize| {
        inst.neighbors(a)
            .to_vec()
            .into_iter()
            .find(|&z| z != v && z != b)
    };
    let (tx, ty) = match (third(x, y), third(y, x)) {
        (Some(tx), Some(ty)) => (tx, ty),
        _ => return generic(inst, Lemma::L6, "L6.2a-degenerate", v, MIN),
    };
    let trio = [r, tx, ty];
    let touching = |a: usize, b: usize| a == b || inst.adjacent(a, b);
    let tri_cands = vec![(v, vec![]), (x, vec![]), (y, vec![])];

    if touching(trio[0], trio[1]) || touching(trio[0], trio[2]) || touching(trio[1], trio[2]) {
        // The outside vertices cannot dominate the whole triangle together.
        let mut p = Planner::new(inst, Lemma::L6, "L6.2a-closed", v);
        p.sequential(&tri_cands, MIN);
        return p.finish();
    }

    let inner = VertexSet::from_iter_with_capacity(inst.n(), [v, x, y, r, tx, ty]);
    let mut gamma = inst.neighbors(tx);
    gamma.union_with(&inst.neighbors(ty));
    gamma.union_with(&inst.neighbors(r));
    gamma.difference_with(&inner);

    let mut p = Planner::new(inst, Lemma::L6, "L6.2a-open", v);
    if gamma.len() == 3 && inst.degree(r) == 4 {
        p.case = "L6.2a-gamma3";
        let none = VertexSet::new(inst.n());
        let just_r = p.set(&[r]);
        p.push(just_r.clone(), none, MIN);
        p.push(p.set(&[v]), just_r, MIN);
        p.push(VertexSet::new(inst.n()), p.set(&[r, v]), 2.0 - W);
        return p.finish();
    }
    p.sequential(&tri_cands, MIN);
    // None of the triangle taken: r, tx and ty are the only dominators left.
    let outer = p.set(&trio);
    if outer.is_subset(inst.free()) {
        p.push(outer, p.set(&[v, x, y]), MIN);
    }
    p.finish()
}

/// Minimum degree 4.
fn lemma7(inst: &Instance, v: usize) -> BranchingPlan {
    generic(inst, Lemma::L7, "L7", v, 5.0)
}

/// Minimum degree δ >= 5: plain sequential branching over `N[v]`.
fn lemma1(inst: &Instance, v: usize) -> BranchingPlan {
    let delta = inst.degree(v);
    generic(inst, Lemma::L1, "L1", v, (delta + 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::reductions::reduce;
    use std::sync::Arc;

    fn instance(n: usize, edges: &[(usize, usize)], marked: &[usize]) -> Instance {
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        let m = VertexSet::from_iter_with_capacity(n, marked.iter().copied());
        Instance::with_marked(Arc::new(g), &m)
    }

    fn sets(plan: &BranchingPlan) -> Vec<(Vec<usize>, Vec<usize>)> {
        plan.branches
            .iter()
            .map(|b| (b.take.to_vec(), b.mark.to_vec()))
            .collect()
    }

    #[test]
    fn lemma2_forces_companion() {
        // v=0 marked; u1=1 has the single free neighbor 3, u2=2 has free
        // neighbors 4 and 5, and N[1] ∩ N[2] = {0}.
        let edges = [
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 7),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 7),
        ];
        let inst = instance(8, &edges, &[0]);
        assert_eq!(applicable_rule(&inst), None);
        let plan = select_branching(&inst).unwrap();
        assert_eq!(plan.source, Lemma::L2);
        assert_eq!(sets(&plan), vec![(vec![1], vec![]), (vec![2, 3], vec![])]);
    }

    #[test]
    fn lemma5_three_branches() {
        // v=0 with N(v) = {1, 2}; d(1) = 3, d(2) = 4, minimum degree 2.
        // Remaining vertices form a ring that keeps degrees >= 2.
        let edges = [
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (3, 5),
            (4, 6),
            (5, 7),
            (6, 7),
            (3, 4),
        ];
        let inst = instance(8, &edges, &[]);
        let out = reduce(inst.clone());
        assert_eq!(out.hits.total(), 0);
        assert_eq!(inst.degree(1), 3);
        assert_eq!(inst.degree(2), 4);
        let plan = select_branching(&inst).unwrap();
        assert_eq!((plan.source, plan.case, plan.pivot), (Lemma::L5, "L5.1", 0));
        let heads: Vec<Vec<usize>> = plan.branches.iter().map(|b| b.take.to_vec()).collect();
        assert_eq!(heads, vec![vec![0], vec![1], vec![2]]);
        // v is adjacent to every later candidate, so only u1 stays marked.
        assert_eq!(plan.branches[2].mark.to_vec(), vec![1]);
    }

    #[test]
    fn lemma1_orders_by_degree() {
        // circulant C13(1, 2, 3): 6-regular, no twins.
        let n = 13;
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (1..=3).map(move |d| (i, (i + d) % n)))
            .collect();
        let inst = instance(n, &edges, &[]);
        let plan = select_branching(&inst).unwrap();
        assert_eq!(plan.source, Lemma::L1);
        assert_eq!(plan.branches.len(), 7);
        let heads = [0, 1, 2, 3, 10, 11, 12];
        for (i, b) in plan.branches.iter().enumerate() {
            assert!(b.take.contains(heads[i]));
            assert_eq!(b.min_decrement, 7.0);
            assert!(b.mark.iter().all(|m| heads[..i].contains(&m)));
        }
    }

    #[test]
    fn rejects_reducible_instance() {
        let inst = instance(2, &[(0, 1)], &[]);
        assert_eq!(
            select_branching(&inst).unwrap_err(),
            PlanError::Reducible(Rule::R2)
        );
    }
}
