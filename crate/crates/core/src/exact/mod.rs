//! Exact branch-and-reduce solver.
//!
//! Every search node reduces its instance to a fixpoint, stops if nothing is
//! left alive, and otherwise branches according to [`plan::select_branching`].
//! The best solution is the smallest chosen set, ties broken by the
//! lexicographically smallest sorted vertex list. There is no bounding, so
//! node counts and the returned set do not depend on evaluation order and the
//! parallel mode reproduces the sequential result exactly.

pub mod measure;
pub mod plan;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::instance::{Instance, Solution};
use crate::reductions::{reduce, RuleCounts};

pub use measure::{measure, vertex_weight, MARKED_DEGREE3_WEIGHT, MEASURE_EPS};
pub use plan::{select_branching, Branch, BranchingPlan, Lemma, PlanError, INTERMEDIATE_CASES};

/// Observed measure drops for one lemma.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DecrementSummary {
    pub count: u64,
    pub min_observed: f64,
    /// Smallest `observed - promised` over all recorded edges.
    pub min_slack: f64,
}

impl Default for DecrementSummary {
    fn default() -> Self {
        DecrementSummary {
            count: 0,
            min_observed: f64::INFINITY,
            min_slack: f64::INFINITY,
        }
    }
}

impl DecrementSummary {
    fn record(&mut self, observed: f64, promised: f64) {
        self.count += 1;
        self.min_observed = self.min_observed.min(observed);
        self.min_slack = self.min_slack.min(observed - promised);
    }

    fn merge(&mut self, other: &DecrementSummary) {
        self.count += other.count;
        self.min_observed = self.min_observed.min(other.min_observed);
        self.min_slack = self.min_slack.min(other.min_slack);
    }
}

/// A recursion edge whose measure drop fell short of its rule's guarantee.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DecrementViolation {
    pub case: &'static str,
    pub observed: f64,
    pub promised: f64,
}

const MAX_RECORDED_VIOLATIONS: usize = 32;

#[derive(Clone, Debug, Default, Serialize)]
pub struct BranchStats {
    pub nodes: u64,
    pub max_depth: usize,
    /// Plans built per lemma.
    pub lemma_counts: BTreeMap<Lemma, u64>,
    /// Plans built per rule case.
    pub case_counts: BTreeMap<&'static str, u64>,
    /// Branches explored per lemma.
    pub branch_counts: BTreeMap<Lemma, u64>,
    pub rule_counts: RuleCounts,
    pub decrements: BTreeMap<Lemma, DecrementSummary>,
    pub violation_count: u64,
    pub violations: Vec<DecrementViolation>,
    /// Reductions that raised the measure (must stay 0).
    pub measure_increases: u64,
}

impl BranchStats {
    pub fn merge(&mut self, other: &BranchStats) {
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        for (k, v) in &other.lemma_counts {
            *self.lemma_counts.entry(*k).or_default() += v;
        }
        for (k, v) in &other.case_counts {
            *self.case_counts.entry(k).or_default() += v;
        }
        for (k, v) in &other.branch_counts {
            *self.branch_counts.entry(*k).or_default() += v;
        }
        self.rule_counts.merge(&other.rule_counts);
        for (k, v) in &other.decrements {
            self.decrements.entry(*k).or_default().merge(v);
        }
        self.violation_count += other.violation_count;
        for v in &other.violations {
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(v.clone());
            }
        }
        self.measure_increases += other.measure_increases;
    }

    fn record_decrement(&mut self, edge: &ParentEdge, observed: f64) {
        self.decrements
            .entry(edge.lemma)
            .or_default()
            .record(observed, edge.promised);
        if observed + MEASURE_EPS < edge.promised {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(DecrementViolation {
                    case: edge.case,
                    observed,
                    promised: edge.promised,
                });
            }
        }
    }

    /// True when every recorded drop met its guarantee and no reduction
    /// raised the measure.
    pub fn measure_checks_pass(&self) -> bool {
        self.violation_count == 0 && self.measure_increases == 0
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Worker threads; 1 keeps everything on the calling thread.
    pub threads: usize,
    /// Recursion depth below which sibling branches run in parallel.
    pub parallel_depth: usize,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            threads: 1,
            parallel_depth: 6,
            deadline: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("search aborted at the deadline after {} nodes", stats.nodes)]
pub struct Aborted {
    pub stats: Box<BranchStats>,
}

#[derive(Clone, Copy)]
struct ParentEdge {
    lemma: Lemma,
    case: &'static str,
    parent_measure: f64,
    promised: f64,
}

struct Timeout;

pub struct Solver {
    opts: SolveOptions,
}

impl Solver {
    pub fn new(opts: SolveOptions) -> Solver {
        Solver { opts }
    }

    pub fn solve(&self, inst: Instance) -> Result<(Solution, BranchStats), Aborted> {
        self.run(|| {
            let mut stats = BranchStats::default();
            let best = self.search(inst, 0, None, &mut stats);
            (best, stats)
        })
    }

    /// Solves an all-free graph component by component.
    pub fn solve_graph(&self, g: &Graph) -> Result<(Solution, BranchStats), Aborted> {
        let root = Instance::new(Arc::new(g.clone()));
        let comps = g.components();
        if comps.len() <= 1 {
            return self.solve(root);
        }
        self.run(|| {
            let mut stats = BranchStats::default();
            let mut union = VertexSet::new(g.n());
            for comp in &comps {
                match self.search(root.restricted_to(comp), 0, None, &mut stats) {
                    Ok(Some(s)) => union.union_with(&s),
                    Ok(None) => return (Ok(None), stats),
                    Err(Timeout) => return (Err(Timeout), stats),
                }
            }
            (Ok(Some(union)), stats)
        })
    }

    fn run<F>(&self, body: F) -> Result<(Solution, BranchStats), Aborted>
    where
        F: FnOnce() -> (Result<Option<VertexSet>, Timeout>, BranchStats) + Send,
    {
        let (best, stats) = if self.opts.threads > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.opts.threads)
                .build()
                .expect("thread pool")
                .install(body)
        } else {
            body()
        };
        match best {
            Ok(Some(s)) => Ok((Solution::Feasible(s), stats)),
            Ok(None) => Ok((Solution::Infeasible, stats)),
            Err(Timeout) => Err(Aborted {
                stats: Box::new(stats),
            }),
        }
    }

    fn search(
        &self,
        inst: Instance,
        depth: usize,
        parent: Option<ParentEdge>,
        stats: &mut BranchStats,
    ) -> Result<Option<VertexSet>, Timeout> {
        stats.nodes += 1;
        stats.max_depth = stats.max_depth.max(depth);
        if let Some(deadline) = self.opts.deadline {
            if Instant::now() >= deadline {
                return Err(Timeout);
            }
        }

        let before = measure(&inst);
        let out = reduce(inst);
        stats.rule_counts.merge(&out.hits);
        if out.infeasible {
            return Ok(None);
        }
        let inst = out.inst;
        let p = measure(&inst);
        if p > before + MEASURE_EPS {
            stats.measure_increases += 1;
        }
        if let Some(edge) = parent {
            stats.record_decrement(&edge, edge.parent_measure - p);
        }
        if inst.alive().is_empty() {
            return Ok(Some(inst.chosen().clone()));
        }

        let plan = plan::plan_reduced(&inst);
        *stats.lemma_counts.entry(plan.source).or_default() += 1;
        *stats.case_counts.entry(plan.case).or_default() += 1;
        *stats.branch_counts.entry(plan.source).or_default() += plan.branches.len() as u64;

        let edge_for = |b: &Branch| ParentEdge {
            lemma: plan.source,
            case: plan.case,
            parent_measure: p,
            promised: b.min_decrement,
        };

        let mut best: Option<VertexSet> = None;
        let mut keep_best = |cand: Option<VertexSet>| {
            if let Some(c) = cand {
                if best.as_ref().is_none_or(|b| c.cmp_size_lex(b).is_lt()) {
                    best = Some(c);
                }
            }
        };

        if self.opts.threads > 1 && depth < self.opts.parallel_depth && plan.branches.len() > 1 {
            let results: Vec<_> = plan
                .branches
                .par_iter()
                .map(|b| {
                    let mut local = BranchStats::default();
                    let r = self.search(b.apply(&inst), depth + 1, Some(edge_for(b)), &mut local);
                    (r, local)
                })
                .collect();
            let mut timed_out = false;
            for (r, local) in results {
                stats.merge(&local);
                match r {
                    Ok(cand) => keep_best(cand),
                    Err(Timeout) => timed_out = true,
                }
            }
            if timed_out {
                return Err(Timeout);
            }
        } else {
            for b in &plan.branches {
                let cand = self.search(b.apply(&inst), depth + 1, Some(edge_for(b)), stats)?;
                keep_best(cand);
            }
        }
        Ok(best)
    }
}

/// Minimum independent dominating set inside the free vertices of `inst`.
pub fn solve(inst: Instance) -> (Solution, BranchStats) {
    Solver::new(SolveOptions::default())
        .solve(inst)
        .expect("no deadline set")
}

/// Minimum independent dominating set of `g`.
pub fn solve_graph(g: &Graph) -> (Solution, BranchStats) {
    Solver::new(SolveOptions::default())
        .solve_graph(g)
        .expect("no deadline set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gnp, named, Family};

    #[test]
    fn small_named_graphs() {
        let p3 = named(Family::Path, &[3]).unwrap();
        let (sol, stats) = solve_graph(&p3);
        assert_eq!(sol.vertices().unwrap().to_vec(), vec![1]);
        assert!(stats.nodes >= 1);

        let c5 = named(Family::Cycle, &[5]).unwrap();
        assert_eq!(solve_graph(&c5).0.size(), Some(2));

        let empty = Graph::empty(0);
        assert_eq!(solve_graph(&empty).0.size(), Some(0));

        let tri2 = named(Family::Triangles, &[2]).unwrap();
        assert_eq!(solve_graph(&tri2).0.size(), Some(2));
    }

    #[test]
    fn marked_closed_neighborhood_is_infeasible() {
        // vertex 1 and its whole neighborhood {0, 2} are marked
        let g = Arc::new(named(Family::Path, &[4]).unwrap());
        let marked = VertexSet::from_iter_with_capacity(4, [0, 1, 2]);
        let (sol, _) = solve(Instance::with_marked(g, &marked));
        assert_eq!(sol, Solution::Infeasible);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = gnp(26, 0.25, 11).unwrap();
        let (seq, s1) = solve_graph(&g);
        let par = Solver::new(SolveOptions {
            threads: 4,
            ..SolveOptions::default()
        });
        let (sol, s2) = par.solve_graph(&g).unwrap();
        assert_eq!(seq, sol);
        assert_eq!(s1.nodes, s2.nodes);
        assert_eq!(s1.rule_counts, s2.rule_counts);
    }

    #[test]
    fn deadline_in_the_past_aborts() {
        let g = gnp(30, 0.2, 3).unwrap();
        let solver = Solver::new(SolveOptions {
            deadline: Some(Instant::now()),
            ..SolveOptions::default()
        });
        let err = solver.solve_graph(&g).unwrap_err();
        assert!(err.stats.nodes >= 1);
    }
}
