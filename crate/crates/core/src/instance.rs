//! The marked/free generalization: find a minimum independent set inside the
//! free vertices that dominates every vertex.
//!
//! An [`Instance`] is the unit of recursion. It keeps the original graph
//! behind an `Arc`, a private working adjacency (marked–marked edges get
//! dropped from it), and three masks: `alive` (not yet dominated), `free`
//! (still eligible) and `chosen` (committed solution vertices).

use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::graph::{verify_solution, Graph};

#[derive(Clone, Debug)]
pub struct Instance {
    graph: Arc<Graph>,
    adj: Vec<VertexSet>,
    alive: VertexSet,
    free: VertexSet,
    chosen: VertexSet,
    initial_free: VertexSet,
}

impl Instance {
    /// Every vertex alive and free.
    pub fn new(graph: Arc<Graph>) -> Instance {
        let all = graph.vertices();
        Instance::with_free(graph, all)
    }

    /// Vertices outside `free` start out marked.
    pub fn with_free(graph: Arc<Graph>, free: VertexSet) -> Instance {
        let n = graph.n();
        assert_eq!(
            free.capacity(),
            n,
            "free mask capacity must match the graph"
        );
        let adj = (0..n).map(|v| graph.neighbors(v).clone()).collect();
        Instance {
            adj,
            alive: VertexSet::full(n),
            initial_free: free.clone(),
            free,
            chosen: VertexSet::new(n),
            graph,
        }
    }

    pub fn with_marked(graph: Arc<Graph>, marked: &VertexSet) -> Instance {
        let free = graph.vertices().difference(marked);
        Instance::with_free(graph, free)
    }

    /// Restricts the instance to the vertices of `keep` (e.g. one connected
    /// component). Vertices outside `keep` are treated as already handled.
    pub fn restricted_to(&self, keep: &VertexSet) -> Instance {
        let mut out = self.clone();
        out.alive.intersect_with(keep);
        out.free.intersect_with(keep);
        out
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    #[inline]
    pub fn alive(&self) -> &VertexSet {
        &self.alive
    }

    #[inline]
    pub fn free(&self) -> &VertexSet {
        &self.free
    }

    #[inline]
    pub fn chosen(&self) -> &VertexSet {
        &self.chosen
    }

    /// The free set the instance was created with.
    pub fn initial_free(&self) -> &VertexSet {
        &self.initial_free
    }

    pub fn marked(&self) -> VertexSet {
        self.alive.difference(&self.free)
    }

    #[inline]
    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    #[inline]
    pub fn is_free(&self, v: usize) -> bool {
        self.free.contains(v)
    }

    #[inline]
    pub fn is_marked(&self, v: usize) -> bool {
        self.alive.contains(v) && !self.free.contains(v)
    }

    /// Working adjacency row of `v`, not masked by `alive`.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Alive neighbors of `v` in the working graph.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].intersection(&self.alive)
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v);
        s
    }

    /// Alive degree of `v` in the working graph.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].intersection_len(&self.alive)
    }

    /// `|N(v) ∩ W|` over alive vertices.
    #[inline]
    pub fn free_degree(&self, v: usize) -> usize {
        self.adj[v].intersection_len(&self.free)
    }

    pub fn free_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].intersection(&self.free)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `N[S]` restricted to alive vertices.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.intersect_with(&self.alive);
        out
    }

    /// Commits `v` to the solution and deletes `N[v]`.
    pub fn take(&mut self, v: usize) {
        debug_assert!(self.free.contains(v), "taking non-free vertex {v}");
        debug_assert!(!self.chosen.intersects(self.graph.neighbors(v)));
        self.chosen.insert(v);
        self.alive.difference_with(&self.adj[v]);
        self.alive.remove(v);
        self.free.intersect_with(&self.alive);
    }

    pub fn take_all(&mut self, s: &VertexSet) {
        for v in s.iter() {
            self.take(v);
        }
    }

    /// Moves free vertices to the marked side.
    pub fn mark_all(&mut self, s: &VertexSet) {
        self.free.difference_with(s);
    }

    /// Deletes `v` without committing it (used by the equivalence rule).
    pub fn delete(&mut self, v: usize) {
        self.alive.remove(v);
        self.free.remove(v);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// The committed vertices as a solution candidate, valid once nothing
    /// remains alive.
    pub fn into_solution(self) -> Solution {
        debug_assert!(self.alive.is_empty());
        Solution::Feasible(self.chosen)
    }
}

/// Outcome of a solve: an independent dominating set or proof that none
/// exists inside the free vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Feasible(VertexSet),
    Infeasible,
}

impl Solution {
    pub fn size(&self) -> Option<usize> {
        match self {
            Solution::Feasible(s) => Some(s.len()),
            Solution::Infeasible => None,
        }
    }

    pub fn vertices(&self) -> Option<&VertexSet> {
        match self {
            Solution::Feasible(s) => Some(s),
            Solution::Infeasible => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible(_))
    }

    /// Checks independence, domination of every vertex and `vertices ⊆ free`.
    pub fn certify(&self, g: &Graph, free: &VertexSet) -> bool {
        match self {
            Solution::Feasible(s) => verify_solution(g, s).is_valid() && s.is_subset(free),
            Solution::Infeasible => true,
        }
    }
}

pub fn free_degree(inst: &Instance, v: usize) -> usize {
    inst.free_degree(v)
}

/// Finds two alive vertices with identical alive closed neighborhoods.
///
/// Vertices are scanned by increasing id and keyed on their closed
/// neighborhood; the first collision wins. The marked vertex is dropped when
/// exactly one of the pair is marked, otherwise the higher id.
pub fn find_equivalent_pair(inst: &Instance) -> Option<(usize, usize)> {
    let mut seen: HashMap<VertexSet, usize> = HashMap::new();
    for v in inst.alive().iter() {
        let key = inst.closed_neighborhood(v);
        if let Some(&u) = seen.get(&key) {
            let (keep, drop) = if inst.is_marked(v) || !inst.is_marked(u) {
                (u, v)
            } else {
                (v, u)
            };
            return Some((keep, drop));
        }
        seen.insert(key, v);
    }
    None
}

fn min_degree_among(inst: &Instance, candidates: &VertexSet) -> Option<usize> {
    let delta = candidates.iter().map(|v| inst.degree(v)).min()?;
    let mut fallback = None;
    for v in candidates.iter().filter(|&v| inst.degree(v) == delta) {
        if inst.neighbors(v).iter().any(|u| inst.degree(u) > delta) {
            return Some(v);
        }
        fallback.get_or_insert(v);
    }
    fallback
}

/// A free vertex of minimum alive degree, preferring one that has a
/// neighbor of strictly larger degree; ties go to the lowest id.
pub fn min_degree_vertex(inst: &Instance) -> Option<usize> {
    min_degree_among(inst, inst.free())
}

/// Same selection rule over all alive vertices, marked ones included.
pub fn min_degree_alive_vertex(inst: &Instance) -> Option<usize> {
    min_degree_among(inst, inst.alive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, Family};

    fn inst(g: Graph) -> Instance {
        Instance::new(Arc::new(g))
    }

    fn marked(g: Graph, m: &[usize]) -> Instance {
        let n = g.n();
        Instance::with_marked(
            Arc::new(g),
            &VertexSet::from_iter_with_capacity(n, m.iter().copied()),
        )
    }

    #[test]
    fn free_degree_examples() {
        // 0 free, neighbors 1 (marked) and 2 (free)
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(free_degree(&marked(g, &[1]), 0), 1);
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(free_degree(&marked(g, &[1, 2]), 0), 0);
        let c5 = inst(named(Family::Cycle, &[5]).unwrap());
        assert!((0..5).all(|v| free_degree(&c5, v) == 2));
    }

    #[test]
    fn equivalent_pair_examples() {
        let k2 = || Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(find_equivalent_pair(&inst(k2())), Some((0, 1)));
        assert_eq!(find_equivalent_pair(&marked(k2(), &[1])), Some((0, 1)));
        assert_eq!(find_equivalent_pair(&marked(k2(), &[0])), Some((1, 0)));
        let p3 = named(Family::Path, &[3]).unwrap();
        assert_eq!(find_equivalent_pair(&inst(p3)), None);
    }

    #[test]
    fn min_degree_examples() {
        let star = inst(named(Family::Star, &[5]).unwrap());
        assert_eq!(min_degree_vertex(&star), Some(1));
        let c5 = inst(named(Family::Cycle, &[5]).unwrap());
        assert_eq!(min_degree_vertex(&c5), Some(0));
        let p4 = inst(named(Family::Path, &[4]).unwrap());
        assert_eq!(min_degree_vertex(&p4), Some(0));
        let all_marked = marked(named(Family::Path, &[2]).unwrap(), &[0, 1]);
        assert_eq!(min_degree_vertex(&all_marked), None);
    }

    #[test]
    fn take_deletes_closed_neighborhood() {
        let mut i = inst(named(Family::Path, &[4]).unwrap());
        i.take(1);
        assert_eq!(i.alive().to_vec(), vec![3]);
        assert_eq!(i.chosen().to_vec(), vec![1]);
        assert_eq!(i.free().to_vec(), vec![3]);
    }
}
