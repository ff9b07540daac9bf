//! JSON report schema shared by the solving subcommands.

use std::collections::BTreeMap;
use std::time::Duration;

use mids_core::exact::{BranchStats, DecrementSummary};
use mids_core::{Lemma, RuleCounts, Solution};
use serde::Serialize;

#[derive(Serialize)]
pub struct InstanceInfo {
    pub n: usize,
    pub m: usize,
    pub source: String,
    pub marked: Vec<usize>,
}

#[derive(Serialize)]
pub struct ResultInfo {
    pub size: Option<usize>,
    pub vertices: Option<Vec<usize>>,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_optimal: Option<bool>,
}

impl ResultInfo {
    pub fn from_solution(s: &Solution, certified_optimal: Option<bool>) -> ResultInfo {
        ResultInfo {
            size: s.size(),
            vertices: s.vertices().map(|v| v.to_vec()),
            feasible: s.is_feasible(),
            certified_optimal,
        }
    }
}

#[derive(Serialize)]
pub struct MeasureInfo {
    pub decrements: BTreeMap<Lemma, DecrementSummary>,
    pub violations: u64,
    pub increases: u64,
}

#[derive(Serialize)]
pub struct StatsInfo {
    pub nodes: u64,
    pub max_depth: usize,
    pub lemma_counts: BTreeMap<Lemma, u64>,
    pub rule_counts: RuleCounts,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub case_counts: BTreeMap<&'static str, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measure: Option<MeasureInfo>,
    pub wall_ms: u64,
}

impl StatsInfo {
    pub fn timed(elapsed: Duration) -> StatsInfo {
        StatsInfo {
            nodes: 0,
            max_depth: 0,
            lemma_counts: BTreeMap::new(),
            rule_counts: RuleCounts::default(),
            case_counts: BTreeMap::new(),
            measure: None,
            wall_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn from_branch(s: &BranchStats, elapsed: Duration) -> StatsInfo {
        StatsInfo {
            nodes: s.nodes,
            max_depth: s.max_depth,
            lemma_counts: s.lemma_counts.clone(),
            rule_counts: s.rule_counts,
            case_counts: s.case_counts.clone(),
            measure: Some(MeasureInfo {
                decrements: s.decrements.clone(),
                violations: s.violation_count,
                increases: s.measure_increases,
            }),
            wall_ms: elapsed.as_millis() as u64,
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub instance: InstanceInfo,
    pub algorithm: String,
    /// Absent when the search was aborted.
    pub result: Option<ResultInfo>,
    pub stats: StatsInfo,
    pub params: serde_json::Value,
}
