//! Non-branching simplifications, applied to a fixpoint.
//!
//! | rule | condition | action |
//! |------|-----------|--------|
//! | R1 | edge between two marked vertices | drop the edge |
//! | R2 | two vertices with equal closed neighborhoods | delete one (marked first, else higher id) |
//! | R3 | isolated free vertex | take it |
//! | R4 | isolated marked vertex | infeasible |
//! | R5 | marked vertex with a single neighbor | take that neighbor |
//! | R6 | free vertex whose neighbors are all marked | take it |
//!
//! Each pass tries R1, R4, R5, R6, R3, R2 in that order and restarts after
//! the first rule that changes something.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::instance::{find_equivalent_pair, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl Rule {
    pub const ALL: [Rule; 6] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6];

    pub fn describe(self) -> &'static str {
        match self {
            Rule::R1 => "marked-marked edge removed",
            Rule::R2 => "equivalent vertex removed",
            Rule::R3 => "isolated free vertex taken",
            Rule::R4 => "isolated marked vertex (infeasible)",
            Rule::R5 => "neighbor of degree-1 marked vertex taken",
            Rule::R6 => "free vertex with only marked neighbors taken",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RuleCounts {
    #[serde(rename = "R1")]
    pub r1: u64,
    #[serde(rename = "R2")]
    pub r2: u64,
    #[serde(rename = "R3")]
    pub r3: u64,
    #[serde(rename = "R4")]
    pub r4: u64,
    #[serde(rename = "R5")]
    pub r5: u64,
    #[serde(rename = "R6")]
    pub r6: u64,
}

impl RuleCounts {
    pub fn get(&self, rule: Rule) -> u64 {
        match rule {
            Rule::R1 => self.r1,
            Rule::R2 => self.r2,
            Rule::R3 => self.r3,
            Rule::R4 => self.r4,
            Rule::R5 => self.r5,
            Rule::R6 => self.r6,
        }
    }

    fn bump(&mut self, rule: Rule) {
        match rule {
            Rule::R1 => self.r1 += 1,
            Rule::R2 => self.r2 += 1,
            Rule::R3 => self.r3 += 1,
            Rule::R4 => self.r4 += 1,
            Rule::R5 => self.r5 += 1,
            Rule::R6 => self.r6 += 1,
        }
    }

    pub fn total(&self) -> u64 {
        Rule::ALL.iter().map(|&r| self.get(r)).sum()
    }

    pub fn merge(&mut self, other: &RuleCounts) {
        self.r1 += other.r1;
        self.r2 += other.r2;
        self.r3 += other.r3;
        self.r4 += other.r4;
        self.r5 += other.r5;
        self.r6 += other.r6;
    }
}

#[derive(Clone, Debug)]
pub struct ReductionOutcome {
    pub inst: Instance,
    /// Vertices committed by R3, R5 and R6 during this call.
    pub forced: VertexSet,
    pub infeasible: bool,
    pub hits: RuleCounts,
}

/// One applicable rule and the vertices it acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    DropEdge(usize, usize),
    Infeasible(usize),
    Take(Rule, usize),
    Delete(usize),
}

impl Step {
    fn rule(self) -> Rule {
        match self {
            Step::DropEdge(..) => Rule::R1,
            Step::Infeasible(_) => Rule::R4,
            Step::Take(rule, _) => rule,
            Step::Delete(_) => Rule::R2,
        }
    }
}

fn next_step(inst: &Instance) -> Option<Step> {
    let marked = inst.marked();
    for v in marked.iter() {
        if let Some(u) = inst.row(v).intersection(&marked).first() {
            return Some(Step::DropEdge(v, u));
        }
    }
    // Past this point marked vertices only touch free ones.
    for v in marked.iter() {
        if inst.degree(v) == 0 {
            return Some(Step::Infeasible(v));
        }
    }
    for v in marked.iter() {
        if inst.degree(v) == 1 {
            let u = inst.neighbors(v).first().expect("degree 1");
            return Some(Step::Take(Rule::R5, u));
        }
    }
    for v in inst.free().iter() {
        if inst.degree(v) > 0 && inst.free_degree(v) == 0 {
            return Some(Step::Take(Rule::R6, v));
        }
    }
    for v in inst.free().iter() {
        if inst.degree(v) == 0 {
            return Some(Step::Take(Rule::R3, v));
        }
    }
    find_equivalent_pair(inst).map(|(_, drop)| Step::Delete(drop))
}

/// The first rule that would fire on `inst`, if any.
pub fn applicable_rule(inst: &Instance) -> Option<Rule> {
    next_step(inst).map(Step::rule)
}

pub fn reduce(mut inst: Instance) -> ReductionOutcome {
    let mut forced = VertexSet::new(inst.n());
    let mut hits = RuleCounts::default();
    while let Some(step) = next_step(&inst) {
        hits.bump(step.rule());
        match step {
            Step::DropEdge(u, v) => inst.remove_edge(u, v),
            Step::Infeasible(_) => {
                return ReductionOutcome {
                    inst,
                    forced,
                    infeasible: true,
                    hits,
                }
            }
            Step::Take(_, v) => {
                assert!(
                    !inst.chosen().intersects(inst.graph().neighbors(v)),
                    "forced vertex {v} adjacent to the partial solution"
                );
                forced.insert(v);
                inst.take(v);
            }
            Step::Delete(v) => inst.delete(v),
        }
    }
    ReductionOutcome {
        inst,
        forced,
        infeasible: false,
        hits,
    }
}
