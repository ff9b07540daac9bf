//! Minimum independent dominating set: an exact branch-and-reduce solver
//! over marked/free instances, bounded maximal-independent-set enumeration,
//! two exponential-time approximation algorithms, and the recurrence
//! arithmetic behind their running-time bounds.

pub mod approx;
pub mod bitset;
pub mod error;
pub mod exact;
pub mod fit;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod io;
pub mod mis;
pub mod recurrence;
pub mod reductions;

pub use approx::{
    approx_fixed_r, approx_partition, greedy_ids, r_of_ratio, ratio_of_r, ApproxReport,
};
pub use bitset::VertexSet;
pub use error::{GraphError, ParamError};
pub use exact::{solve, solve_graph, BranchStats, Lemma, SolveOptions, Solver};
pub use fit::bench_fit;
pub use generators::{gnp, named, Family, GraphSpec};
pub use graph::{closed_neighborhood, verify_solution, Graph, Verification};
pub use instance::{find_equivalent_pair, free_degree, min_degree_vertex, Instance, Solution};
pub use mis::{enumerate_all, enumerate_bounded, oracle_opt};
pub use recurrence::{branching_factor, compose_and_factor, BranchTree, RecurrenceSpec};
pub use reductions::{reduce, ReductionOutcome, Rule, RuleCounts};
