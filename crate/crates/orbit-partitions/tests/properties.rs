//! Property and exhaustive invariant tests for the partition calculus.

use std::cmp::Ordering;

use proptest::prelude::*;

use orbit_partitions::{
    brute_extrema, bv_dual, enumerate_partitions, is_metaplectic_special, is_special, is_valid,
    ls_dual, metaplectic_expansion, parity_collapse, principal_partition, special_collapse,
    special_expansion, Direction, Error, ExtremumPredicate, GroupKind, GroupType, Partition,
    DEFAULT_ENUMERATION_CAP,
};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..=10).prop_map(Partition::from_parts)
}

fn all_of(n: u64) -> Vec<Partition> {
    enumerate_partitions(n, DEFAULT_ENUMERATION_CAP).unwrap()
}

/// The three parity groups whose partitions have the given size.
fn groups_of_size(n: u64) -> Vec<GroupType> {
    if n % 2 == 0 {
        vec![
            GroupType::sp((n / 2) as u32),
            GroupType::so_even((n / 2) as u32),
        ]
    } else {
        vec![GroupType::so_odd(((n - 1) / 2) as u32)]
    }
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in arb_partition()) {
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn transpose_preserves_size(p in arb_partition()) {
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn display_parse_roundtrip(p in arb_partition()) {
        let shown = p.to_string();
        prop_assert_eq!(shown.parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn serde_roundtrip(p in arb_partition()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn add_rowwise_adds_sizes(p in arb_partition(), q in arb_partition()) {
        let sum = Partition::add_rowwise(&[p.clone(), q.clone()]);
        prop_assert_eq!(sum.size(), p.size() + q.size());
        prop_assert!(p.part(0) + q.part(0) == sum.part(0));
    }

    #[test]
    fn parity_collapse_fixed_point_is_reached(p in arb_partition()) {
        // the collapse lands on a valid partition of the same size and is
        // idempotent, for both parity families
        let n = p.size();
        for group in groups_of_size(n) {
            let c = parity_collapse(&p, group).unwrap();
            prop_assert!(is_valid(&c, group).unwrap());
            prop_assert!(c.dominance_leq(&p).unwrap());
            prop_assert_eq!(parity_collapse(&c, group).unwrap(), c);
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=10u64 {
        let all = all_of(n);
        for p in &all {
            assert!(p.dominance_leq(p).unwrap());
            for q in &all {
                let pq = p.dominance_leq(q).unwrap();
                let qp = q.dominance_leq(p).unwrap();
                if pq && qp {
                    assert_eq!(p, q);
                }
                for r in &all {
                    if pq && q.dominance_leq(r).unwrap() {
                        assert!(p.dominance_leq(r).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn transpose_reverses_dominance_and_dominance_refines_lex() {
    for n in 0..=12u64 {
        let all = all_of(n);
        for p in &all {
            for q in &all {
                if p.dominance_leq(q).unwrap() {
                    assert!(q.transpose().dominance_leq(&p.transpose()).unwrap());
                    assert_ne!(p.lex_cmp(q).unwrap(), Ordering::Greater);
                }
            }
        }
    }
}

#[test]
fn enumeration_is_descending_lex_and_counts_match() {
    // partition counts p(0..): OEIS A000041 prefix
    let expected = [
        1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
    ];
    for (n, &count) in expected.iter().enumerate() {
        let all = all_of(n as u64);
        assert_eq!(all.len() as u64, count, "p({n})");
        for w in all.windows(2) {
            assert_eq!(w[0].lex_cmp(&w[1]).unwrap(), Ordering::Greater);
        }
    }
}

#[test]
fn collapse_below_expansion_above() {
    for n in 0..=14u64 {
        let all = all_of(n);
        for group in groups_of_size(n) {
            for p in &all {
                let c = parity_collapse(p, group).unwrap();
                assert!(c.dominance_leq(p).unwrap());
                match special_expansion(p, group) {
                    Ok(e) => {
                        assert!(p.dominance_leq(&e).unwrap());
                        assert!(is_special(&e, group).unwrap());
                        assert_eq!(special_expansion(&e, group).unwrap(), e);
                    }
                    Err(Error::NonUniqueExtremum { .. }) => {
                        assert!(!is_valid(p, group).unwrap(), "unique on valid inputs");
                    }
                    // [2n] for SO_even dominates every special partition
                    Err(Error::EmptyCandidateSet { .. }) => {
                        assert!(!is_valid(p, group).unwrap());
                        assert_eq!(group.kind(), GroupKind::SoEven);
                        assert_eq!(p.len(), 1);
                    }
                    Err(e) => panic!("unexpected error {e}"),
                }
                match special_collapse(p, group) {
                    Ok(c) => {
                        assert!(c.dominance_leq(p).unwrap());
                        assert!(is_special(&c, group).unwrap());
                        assert_eq!(special_collapse(&c, group).unwrap(), c);
                    }
                    Err(Error::NonUniqueExtremum { .. }) => {}
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }
}

#[test]
fn parity_collapse_is_monotone() {
    for n in 0..=12u64 {
        let all = all_of(n);
        for group in groups_of_size(n) {
            let collapsed: Vec<Partition> = all
                .iter()
                .map(|p| parity_collapse(p, group).unwrap())
                .collect();
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    if p.dominance_leq(q).unwrap() {
                        assert!(collapsed[i].dominance_leq(&collapsed[j]).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn special_collapse_below_parity_collapse() {
    for n in 0..=12u64 {
        let all = all_of(n);
        for group in groups_of_size(n) {
            for p in &all {
                let pc = parity_collapse(p, group).unwrap();
                // every maximal special partition below p sits below the
                // parity collapse, whether or not the maximum is unique
                for sc in
                    brute_extrema(p, group, ExtremumPredicate::Special, Direction::MaxBelow)
                        .unwrap()
                {
                    assert!(sc.dominance_leq(&pc).unwrap());
                }
            }
        }
    }
}

#[test]
fn specialness_is_being_fixed_by_collapse_and_expansion() {
    for n in 0..=14u64 {
        let all = all_of(n);
        for group in groups_of_size(n) {
            for p in &all {
                if !is_valid(p, group).unwrap() {
                    continue;
                }
                let special = is_special(p, group).unwrap();
                assert_eq!(special_expansion(p, group).unwrap() == *p, special);
                assert_eq!(special_collapse(p, group) == Ok(p.clone()), special);
            }
        }
    }
}

#[test]
fn metaplectic_expansion_properties() {
    for n in (0..=16u64).step_by(2) {
        let group = GroupType::metaplectic((n / 2) as u32);
        for p in all_of(n) {
            if !is_valid(&p, group).unwrap() {
                assert!(metaplectic_expansion(&p).is_err());
                continue;
            }
            match metaplectic_expansion(&p) {
                Ok(e) => {
                    assert!(p.dominance_leq(&e).unwrap());
                    assert!(is_metaplectic_special(&e).unwrap());
                    // non-strict minimum: metaplectic-special inputs are fixed
                    if is_metaplectic_special(&p).unwrap() {
                        assert_eq!(e, p);
                    }
                }
                Err(Error::NonUniqueExtremum { .. }) => {
                    assert!(!is_metaplectic_special(&p).unwrap());
                }
                Err(Error::EmptyCandidateSet { .. }) => assert_eq!(n, 0),
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }
}

#[test]
fn ls_dual_preserves_validity_and_size() {
    for n in 0..=14u64 {
        for group in groups_of_size(n) {
            for p in all_of(n) {
                if !is_valid(&p, group).unwrap() {
                    continue;
                }
                let d = ls_dual(&p, group).unwrap();
                assert_eq!(d.size(), n);
                assert!(is_valid(&d, group).unwrap());
            }
        }
    }
}

#[test]
fn report_and_parameter_json_roundtrip() {
    use orbit_partitions::{run_oracle_suite, ArthurParameter, OracleReport};
    let report = run_oracle_suite(4).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<OracleReport>(&json).unwrap(), report);

    let psi = ArthurParameter::case_i(3, 1, 3).unwrap();
    let json = serde_json::to_string(&psi).unwrap();
    assert_eq!(serde_json::from_str::<ArthurParameter>(&json).unwrap(), psi);
}

#[test]
fn principal_partition_facts() {
    for n in 0..=8u32 {
        for group in [
            GroupType::sp(n),
            GroupType::so_odd(n),
            GroupType::so_even(n),
            GroupType::type_a(n),
        ] {
            let p = principal_partition(group).unwrap();
            assert!(is_valid(&p, group).unwrap());
            if group.kind() != GroupKind::TypeA {
                assert!(is_special(&p, group).unwrap());
            }
            let trivial =
                Partition::from_parts(vec![1; group.dual_partition_size().unwrap() as usize]);
            assert_eq!(bv_dual(&trivial, group).unwrap(), p);
        }
    }
}
