//! Deterministic graph generators.
//!
//! `gnp` draws from `rand_chacha::ChaCha8Rng::seed_from_u64(seed)`. Pairs
//! `(u, v)` with `u < v` are visited in lexicographic order and each becomes
//! an edge when `rng.gen_bool(p)` succeeds. ChaCha output is platform
//! independent, so an `(n, p, seed)` triple names the same graph everywhere.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ParamError;
use crate::graph::Graph;

pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, ParamError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ParamError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    /// `star n` has `n` vertices: center 0 and `n - 1` leaves.
    Star,
    Complete,
    /// `triangles k`: `k` disjoint triangles.
    Triangles,
    /// `complete_bipartite a b`: sides `0..a` and `a..a+b`.
    CompleteBipartite,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Triangles => "triangles",
            Family::CompleteBipartite => "complete_bipartite",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            "complete" => Family::Complete,
            "triangles" => Family::Triangles,
            "complete_bipartite" => Family::CompleteBipartite,
            other => return Err(format!("unknown graph family `{other}`")),
        })
    }
}

pub fn named(family: Family, sizes: &[usize]) -> Result<Graph, ParamError> {
    let size_err = |requirement, got| ParamError::FamilySize {
        family: family.name(),
        requirement,
        got,
    };
    if sizes.len() != family.arity() {
        return Err(size_err("a size argument per part", sizes.len()));
    }
    let n = sizes[0];
    let edges: Vec<(usize, usize)> = match family {
        Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(size_err("n >= 3", n));
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        Family::Star => {
            if n < 1 {
                return Err(size_err("n >= 1", n));
            }
            (1..n).map(|i| (0, i)).collect()
        }
        Family::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        Family::Triangles => (0..n)
            .flat_map(|k| {
                [
                    (3 * k, 3 * k + 1),
                    (3 * k + 1, 3 * k + 2),
                    (3 * k, 3 * k + 2),
                ]
            })
            .collect(),
        Family::CompleteBipartite => {
            let (a, b) = (sizes[0], sizes[1]);
            (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect()
        }
    };
    let order = match family {
        Family::Triangles => 3 * n,
        Family::CompleteBipartite => sizes[0] + sizes[1],
        _ => n,
    };
    Ok(Graph::new(order, edges).expect("family edges are simple"))
}

/// A textual graph source: `gnp/<n>/<p>/<seed>` or `<family>/<size>[/<size>]`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    Gnp { n: usize, p: f64, seed: u64 },
    Named { family: Family, sizes: Vec<usize> },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, ParamError> {
        match self {
            GraphSpec::Gnp { n, p, seed } => gnp(*n, *p, *seed),
            GraphSpec::Named { family, sizes } => named(*family, sizes),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split('/').collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| format!("bad size `{t}`: {e}"))
        };
        match parts.as_slice() {
            ["gnp", n, p, seed] => Ok(GraphSpec::Gnp {
                n: num(n)?,
                p: p.parse()
                    .map_err(|e| format!("bad probability `{p}`: {e}"))?,
                seed: seed
                    .parse()
                    .map_err(|e| format!("bad seed `{seed}`: {e}"))?,
            }),
            ["gnp", ..] => Err("expected gnp/<n>/<p>/<seed>".into()),
            [family, rest @ ..] if !rest.is_empty() => Ok(GraphSpec::Named {
                family: family.parse()?,
                sizes: rest.iter().map(|t| num(t)).collect::<Result<_, _>>()?,
            }),
            _ => Err(format!("cannot parse graph spec `{s}`")),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Gnp { n, p, seed } => write!(f, "gnp/{n}/{p}/{seed}"),
            GraphSpec::Named { family, sizes } => {
                write!(f, "{}", family.name())?;
                for s in sizes {
                    write!(f, "/{s}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes() {
        let g = gnp(5, 0.0, 3).unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
        let k4 = gnp(4, 1.0, 3).unwrap();
        assert_eq!(k4.m(), 6);
        assert_eq!(gnp(3, 1.5, 0), Err(ParamError::Probability(1.5)));
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(10, 0.5, 42).unwrap();
        let b = gnp(10, 0.5, 42).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = gnp(10, 0.5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn named_families() {
        let c5 = named(Family::Cycle, &[5]).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let t3 = named(Family::Triangles, &[3]).unwrap();
        assert_eq!((t3.n(), t3.m()), (9, 9));
        let star = named(Family::Star, &[5]).unwrap();
        assert_eq!(star.degree(0), 4);
        assert!((1..5).all(|v| star.degree(v) == 1));
        let k5 = named(Family::Complete, &[5]).unwrap();
        assert_eq!(k5.m(), 10);
        let k33 = named(Family::CompleteBipartite, &[3, 3]).unwrap();
        assert_eq!((k33.n(), k33.m()), (6, 9));
        assert!(named(Family::Cycle, &[2]).is_err());
        assert!(named(Family::CompleteBipartite, &[2]).is_err());
    }

    #[test]
    fn spec_round_trip() {
        for s in ["gnp/30/0.2/7", "cycle/5", "complete_bipartite/3/4"] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("gnp/3".parse::<GraphSpec>().is_err());
        assert!("hexagon/3".parse::<GraphSpec>().is_err());
        assert!("cycle".parse::<GraphSpec>().is_err());
    }
}
