mod common;

use mids_core::exact::{measure, select_branching, MEASURE_EPS};
use mids_core::reductions::applicable_rule;
use mids_core::{oracle_opt, reduce, Solution};

#[test]
fn reduction_preserves_optimum() {
    for seed in 0..600 {
        let inst = common::random_marked(seed, 12, 0.3);
        let before = oracle_opt(&inst);
        let out = reduce(inst.clone());
        if out.infeasible {
            assert_eq!(before, Solution::Infeasible, "seed {seed}");
            continue;
        }
        assert!(measure(&out.inst) <= measure(&inst) + MEASURE_EPS);
        assert!(out.forced.is_subset(out.inst.chosen()));
        assert_eq!(applicable_rule(&out.inst), None);
        assert_eq!(oracle_opt(&out.inst).size(), before.size(), "seed {seed}");
    }
}

#[test]
fn reduced_instance_invariants() {
    for seed in 0..300 {
        let out = reduce(common::random_marked(seed, 14, 0.4));
        if out.infeasible {
            continue;
        }
        let inst = &out.inst;
        assert!(inst.free().is_subset(inst.alive()));
        assert!(!inst.chosen().intersects(inst.alive()));
        for v in inst.marked().iter() {
            assert!(
                inst.degree(v) >= 2,
                "seed {seed}: marked {v} has low degree"
            );
            assert_eq!(inst.neighbors(v).intersection(&inst.marked()).len(), 0);
        }
    }
}

/// The optimum of a reduced instance equals the best optimum over the
/// children of its branching plan.
#[test]
fn branching_is_exhaustive() {
    let mut checked = 0;
    for seed in 0..2000 {
        let inst = if seed % 2 == 0 {
            common::random_marked(seed, 10, 0.3)
        } else {
            common::random_marked(seed, 10, 0.0)
        };
        let out = reduce(inst);
        if out.infeasible || out.inst.alive().is_empty() {
            continue;
        }
        let inst = out.inst;
        let plan = select_branching(&inst).unwrap();
        let want = oracle_opt(&inst).size();
        let got = plan
            .branches
            .iter()
            .filter_map(|b| {
                assert!(!b.mark.intersects(&b.take));
                oracle_opt(&b.apply(&inst)).size()
            })
            .min();
        assert_eq!(got, want, "seed {seed}, case {}", plan.case);
        checked += 1;
    }
    assert!(checked > 500);
}
