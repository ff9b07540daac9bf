//! Immutable undirected simple graphs with bitset adjacency.

use crate::bitset::VertexSet;
use crate::error::GraphError;

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency rows are symmetric, loop-free and free of parallel edges; the
/// constructor rejects anything else. Vertex ids never change, so subgraphs
/// are expressed as masks over the same id space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
            m += 1;
        }
        Ok(Graph { adj, m })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree of `v` inside the subgraph induced by `mask`.
    #[inline]
    pub fn degree_in(&self, v: usize, mask: &VertexSet) -> usize {
        self.adj[v].intersection_len(mask)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in increasing lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for w in self.adj[u].iter() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// `N[v]`, optionally restricted to an alive mask.
pub fn closed_neighborhood(g: &Graph, v: usize, alive: Option<&VertexSet>) -> VertexSet {
    assert!(v < g.n(), "vertex {v} out of range");
    let mut s = g.neighbors(v).clone();
    s.insert(v);
    if let Some(mask) = alive {
        s.intersect_with(mask);
    }
    s
}

/// `N[S]` = union of closed neighborhoods.
pub fn closed_neighborhood_of_set(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    for v in s.iter() {
        out.union_with(g.neighbors(v));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub independent: bool,
    pub dominating: bool,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.independent && self.dominating
    }
}

pub fn verify_solution(g: &Graph, s: &VertexSet) -> Verification {
    let independent = s.iter().all(|v| !g.neighbors(v).intersects(s));
    let dominating = closed_neighborhood_of_set(g, s).len() == g.n();
    Verification {
        independent,
        dominating,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, Family};

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_iter_with_capacity(n, xs.iter().copied())
    }

    #[test]
    fn closed_neighborhood_examples() {
        let tri = named(Family::Complete, &[3]).unwrap();
        assert_eq!(closed_neighborhood(&tri, 0, None).to_vec(), vec![0, 1, 2]);
        let iso = Graph::empty(2);
        assert_eq!(closed_neighborhood(&iso, 1, None).to_vec(), vec![1]);
        let p3 = named(Family::Path, &[3]).unwrap();
        assert_eq!(closed_neighborhood(&p3, 1, None).to_vec(), vec![0, 1, 2]);
        let alive = set(3, &[1, 2]);
        assert_eq!(
            closed_neighborhood(&p3, 1, Some(&alive)).to_vec(),
            vec![1, 2]
        );
    }

    #[test]
    fn verify_on_c4() {
        let c4 = named(Family::Cycle, &[4]).unwrap();
        let ok = |i, d| Verification {
            independent: i,
            dominating: d,
        };
        assert_eq!(verify_solution(&c4, &set(4, &[0, 2])), ok(true, true));
        assert_eq!(verify_solution(&c4, &set(4, &[0])), ok(true, false));
        assert_eq!(verify_solution(&c4, &set(4, &[0, 1])), ok(false, true));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn components_split() {
        let g = named(Family::Triangles, &[2]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);
    }
}
