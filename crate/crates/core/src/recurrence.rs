//! Branching factors of linear recurrences `T(p) ≤ Σ T(p - k_i)`.
//!
//! The factor is the root `x ≥ 1` of `Σ x^{-k_i} = 1`. The left side is
//! strictly decreasing in `x`, equals `p` at `x = 1` and is at most 1 at
//! `x = p^{1/min k}`, so bisection on that bracket always converges.

use serde::Serialize;

use crate::error::ParamError;

const TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecurrenceSpec {
    decrements: Vec<f64>,
}

impl RecurrenceSpec {
    pub fn new(decrements: Vec<f64>) -> Result<RecurrenceSpec, ParamError> {
        if decrements.is_empty() {
            return Err(ParamError::EmptyDecrements);
        }
        if let Some(&k) = decrements.iter().find(|k| !(k.is_finite() && **k > 0.0)) {
            return Err(ParamError::BadDecrement(k));
        }
        Ok(RecurrenceSpec { decrements })
    }

    pub fn decrements(&self) -> &[f64] {
        &self.decrements
    }
}

fn excess(decrements: &[f64], x: f64) -> f64 {
    decrements.iter().map(|k| x.powf(-k)).sum::<f64>() - 1.0
}

pub fn branching_factor(spec: &RecurrenceSpec) -> f64 {
    let ks = spec.decrements();
    let p = ks.len() as f64;
    if ks.len() == 1 {
        return 1.0;
    }
    let kmin = ks.iter().copied().fold(f64::INFINITY, f64::min);
    let (mut lo, mut hi) = (1.0, p.powf(1.0 / kmin));
    while hi - lo > TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if excess(ks, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Validates `decrements` and returns their branching factor.
pub fn factor_of(decrements: &[f64]) -> Result<f64, ParamError> {
    RecurrenceSpec::new(decrements.to_vec()).map(|s| branching_factor(&s))
}

/// A composed branching: each edge lowers the measure by its decrement and
/// the recurrence is read off the root-to-leaf sums.
#[derive(Clone, Debug, PartialEq)]
pub enum BranchTree {
    Leaf,
    Node(Vec<(f64, BranchTree)>),
}

impl BranchTree {
    /// A one-level tree with one leaf per decrement.
    pub fn from_leaves(decrements: &[f64]) -> BranchTree {
        BranchTree::Node(decrements.iter().map(|&k| (k, BranchTree::Leaf)).collect())
    }

    /// Cumulative decrement of every leaf, left to right.
    pub fn leaf_decrements(&self) -> Result<Vec<f64>, ParamError> {
        fn walk(t: &BranchTree, depth: f64, out: &mut Vec<f64>) -> Result<(), ParamError> {
            match t {
                BranchTree::Leaf => out.push(depth),
                BranchTree::Node(children) => {
                    for (k, c) in children {
                        if !(k.is_finite() && *k > 0.0) {
                            return Err(ParamError::BadDecrement(*k));
                        }
                        walk(c, depth + k, out)?;
                    }
                }
            }
            Ok(())
        }
        let mut out = Vec::new();
        walk(self, 0.0, &mut out)?;
        Ok(out)
    }
}

/// Branching factor of the flattened tree.
pub fn compose_and_factor(tree: &BranchTree) -> Result<f64, ParamError> {
    factor_of(&tree.leaf_decrements()?)
}
