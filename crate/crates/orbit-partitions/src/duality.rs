//! Duality maps on nilpotent orbits: the Barbasch-Vogan map from the dual
//! side and the same-type Lusztig-Spaltenstein map.

use serde::{Deserialize, Serialize};

use crate::collapse::parity_collapse;
use crate::error::{Error, Result};
use crate::group::{is_special, is_valid, GroupKind, GroupType, Parity};
use crate::partition::Partition;

/// One recorded step of a duality recipe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: String,
    pub result: Partition,
}

/// Audit trail of a Barbasch-Vogan evaluation: input, every intermediate
/// partition, and the final result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeTrace {
    pub group: GroupType,
    pub input: Partition,
    pub steps: Vec<TraceStep>,
    pub output: Partition,
}

fn check_dual_input(q: &Partition, group: GroupType) -> Result<()> {
    let expected = group.dual_partition_size()?;
    if q.size() != expected {
        return Err(Error::SizeMismatch {
            expected,
            actual: q.size(),
        });
    }
    if let Some(parity) = group.dual_parity()? {
        if !parity.admits(q) {
            return Err(Error::Parity {
                partition: q.to_string(),
                constraint: parity.name(),
                context: format!("the dual side of {group}"),
            });
        }
    }
    Ok(())
}

/// Barbasch-Vogan duality: maps a partition on the dual side of `group` to
/// a special partition for `group` itself.
///
/// Per-group recipe: Sp lowers the smallest part, symplectic-collapses,
/// then transposes; SO_odd raises the largest part, orthogonal-collapses,
/// then transposes; SO_even transposes first and orthogonal-collapses;
/// type A is the plain transpose. The metaplectic cover has no recipe.
pub fn bv_dual(q: &Partition, group: GroupType) -> Result<Partition> {
    Ok(bv_dual_traced(q, group)?.output)
}

/// `bv_dual` with the full intermediate trace.
pub fn bv_dual_traced(q: &Partition, group: GroupType) -> Result<RecipeTrace> {
    check_dual_input(q, group)?;
    let mut steps = Vec::new();
    let push = |steps: &mut Vec<TraceStep>, op: &str, r: &Partition| {
        steps.push(TraceStep {
            op: op.to_string(),
            result: r.clone(),
        });
    };
    let output = match group.kind() {
        GroupKind::TypeA => {
            let t = q.transpose();
            push(&mut steps, "transpose", &t);
            t
        }
        GroupKind::Sp => {
            let adjusted = q.decrement_smallest()?;
            push(&mut steps, "decrement_smallest", &adjusted);
            let collapsed = parity_collapse(&adjusted, group)?;
            push(&mut steps, "symplectic_collapse", &collapsed);
            let t = collapsed.transpose();
            push(&mut steps, "transpose", &t);
            t
        }
        GroupKind::SoOdd => {
            let adjusted = q.increment_largest();
            push(&mut steps, "increment_largest", &adjusted);
            let collapsed = parity_collapse(&adjusted, group)?;
            push(&mut steps, "orthogonal_collapse", &collapsed);
            let t = collapsed.transpose();
            push(&mut steps, "transpose", &t);
            t
        }
        GroupKind::SoEven => {
            let t = q.transpose();
            push(&mut steps, "transpose", &t);
            let collapsed = parity_collapse(&t, group)?;
            push(&mut steps, "orthogonal_collapse", &collapsed);
            collapsed
        }
        GroupKind::MetaplecticSp => {
            return Err(Error::UnsupportedGroup {
                op: "bv_dual",
                group: group.to_string(),
            })
        }
    };
    // the specialness of the output is a theorem, not a definition; treat
    // any failure as an internal bug
    if !is_valid(&output, group)? || !is_special(&output, group)? {
        return Err(Error::Invariant(format!(
            "bv_dual({q}) for {group} produced {output}, which is not valid and special"
        )));
    }
    Ok(RecipeTrace {
        group,
        input: q.clone(),
        steps,
        output,
    })
}

/// Same-type Lusztig-Spaltenstein duality: the parity collapse of the
/// transpose. Its image is exactly the set of special partitions, and it
/// restricts to an involution on them.
pub fn ls_dual(p: &Partition, group: GroupType) -> Result<Partition> {
    if group.kind() == GroupKind::MetaplecticSp {
        return Err(Error::UnsupportedGroup {
            op: "ls_dual",
            group: group.to_string(),
        });
    }
    if !is_valid(p, group)? {
        return Err(Error::Parity {
            partition: p.to_string(),
            constraint: group.parity().map(Parity::name).unwrap_or("unconstrained"),
            context: format!("ls_dual for {group}"),
        });
    }
    parity_collapse(&p.transpose(), group)
}

/// Exhaustive duality checks feeding the self-check report: bv_dual output
/// legality, order reversal, cross-direction round trips on specials, and
/// the characterization of specials as the ls_dual image. Quadratic checks
/// are capped below `max_size` where noted.
pub fn run_duality_suite(max_size: u64) -> Result<Vec<crate::collapse::Counterexample>> {
    use crate::collapse::Counterexample;
    use crate::partition::{enumerate_partitions, DEFAULT_ENUMERATION_CAP};

    let mut bad = Vec::new();
    let mut push = |op: &str, group: GroupType, input: &Partition, fast: String, oracle: String| {
        bad.push(Counterexample {
            op: op.to_string(),
            group: group.to_string(),
            input: input.clone(),
            fast_result: fast,
            oracle_result: oracle,
        });
    };

    for dual_size in 0..=max_size {
        let mut groups = vec![GroupType::type_a(dual_size as u32)];
        if dual_size % 2 == 1 {
            groups.push(GroupType::sp(((dual_size - 1) / 2) as u32));
        } else {
            groups.push(GroupType::so_odd((dual_size / 2) as u32));
            groups.push(GroupType::so_even((dual_size / 2) as u32));
        }
        let all = enumerate_partitions(dual_size, DEFAULT_ENUMERATION_CAP)?;
        for group in groups {
            let legal: Vec<&Partition> = all
                .iter()
                .filter(|q| match group.dual_parity().unwrap() {
                    None => true,
                    Some(parity) => parity.admits(q),
                })
                .collect();
            let mut duals = Vec::with_capacity(legal.len());
            for q in &legal {
                match bv_dual(q, group) {
                    Ok(d) => duals.push(Some(d)),
                    Err(e) => {
                        push("bv_dual_legality", group, q, e.to_string(), "valid special output".to_string());
                        duals.push(None);
                    }
                }
            }
            // order reversal (quadratic, capped at 14)
            if dual_size <= 14 {
                for (i, q1) in legal.iter().enumerate() {
                    for (j, q2) in legal.iter().enumerate() {
                        let (Some(d1), Some(d2)) = (&duals[i], &duals[j]) else {
                            continue;
                        };
                        if q1.dominance_leq(q2)? && !d2.dominance_leq(d1)? {
                            push(
                                "bv_dual_order_reversal",
                                group,
                                q1,
                                format!("dual [{d1}]"),
                                format!("above dual [{d2}] of [{q2}]"),
                            );
                        }
                    }
                }
            }
        }
    }

    // cross-direction round trips on specials, and ls_dual facts
    for size in 0..=max_size {
        let all = enumerate_partitions(size, DEFAULT_ENUMERATION_CAP)?;
        let groups: Vec<GroupType> = if size % 2 == 1 {
            vec![GroupType::so_odd(((size - 1) / 2) as u32)]
        } else {
            vec![
                GroupType::sp((size / 2) as u32),
                GroupType::so_even((size / 2) as u32),
            ]
        };
        for group in groups {
            let mut image: Vec<Partition> = Vec::new();
            for p in &all {
                if !is_valid(p, group)? {
                    continue;
                }
                let special = is_special(p, group)?;
                let d = ls_dual(p, group)?;
                if !image.contains(&d) {
                    image.push(d.clone());
                }
                // ls_dual is an involution exactly on specials
                if size <= 14 {
                    let fixed = ls_dual(&d, group)? == *p;
                    if fixed != special {
                        push(
                            "ls_dual_involution",
                            group,
                            p,
                            format!("round trip fixed: {fixed}"),
                            format!("special: {special}"),
                        );
                    }
                }
                // cross-direction round trip on specials
                let trip_cap = if group.kind() == GroupKind::SoEven { 14 } else { 13 };
                if special && size <= trip_cap {
                    let back = match group.kind() {
                        // special Sp-partition of 2n: through SO_odd(n) and back
                        GroupKind::Sp => {
                            let so = GroupType::so_odd(group.rank_param());
                            bv_dual(&bv_dual(p, so)?, group)?
                        }
                        // special B-partition of 2n+1: through Sp(n) and back
                        GroupKind::SoOdd => {
                            let sp = GroupType::sp(group.rank_param());
                            bv_dual(&bv_dual(p, sp)?, group)?
                        }
                        _ => bv_dual(&bv_dual(p, group)?, group)?,
                    };
                    if back != *p {
                        push(
                            "bv_dual_round_trip",
                            group,
                            p,
                            format!("[{back}]"),
                            format!("[{p}]"),
                        );
                    }
                }
            }
            // image of ls_dual = set of specials
            for p in &all {
                if !is_valid(p, group)? {
                    continue;
                }
                let special = is_special(p, group)?;
                if special != image.contains(p) {
                    push(
                        "ls_dual_image",
                        group,
                        p,
                        format!("in image: {}", image.contains(p)),
                        format!("special: {special}"),
                    );
                }
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn bv_dual_examples() {
        assert_eq!(bv_dual(&p("3,3,3"), GroupType::sp(4)).unwrap(), p("3,3,2"));
        assert_eq!(bv_dual(&p("2,2"), GroupType::so_odd(2)).unwrap(), p("3,1,1"));
        assert_eq!(
            bv_dual(&p("3,3"), GroupType::so_even(3)).unwrap(),
            p("2,2,1,1")
        );
        assert_eq!(
            bv_dual(&p("4,4,1,1,1"), GroupType::sp(5)).unwrap(),
            p("4,2,2,2")
        );
        assert_eq!(bv_dual(&p("3,1"), GroupType::type_a(4)).unwrap(), p("2,1,1"));
    }

    #[test]
    fn bv_dual_rejects_bad_input() {
        // wrong size for the dual side
        assert!(matches!(
            bv_dual(&p("3,3"), GroupType::sp(4)),
            Err(Error::SizeMismatch { .. })
        ));
        // [3,2,2,2] is not an orthogonal partition of 9
        assert!(matches!(
            bv_dual(&p("3,2,2,2"), GroupType::sp(4)),
            Err(Error::Parity { .. })
        ));
        assert!(matches!(
            bv_dual(&p("2,2"), GroupType::metaplectic(2)),
            Err(Error::UnsupportedGroup { .. })
        ));
    }

    #[test]
    fn bv_dual_trace_records_steps() {
        let trace = bv_dual_traced(&p("3,3,3"), GroupType::sp(4)).unwrap();
        let ops: Vec<&str> = trace.steps.iter().map(|s| s.op.as_str()).collect();
        assert_eq!(ops, ["decrement_smallest", "symplectic_collapse", "transpose"]);
        assert_eq!(trace.steps[0].result, p("3,3,2"));
        assert_eq!(trace.output, p("3,3,2"));
    }

    #[test]
    fn principal_is_dual_of_trivial() {
        use crate::group::principal_partition;
        for group in [
            GroupType::sp(4),
            GroupType::so_odd(3),
            GroupType::so_even(3),
            GroupType::type_a(5),
        ] {
            let trivial = Partition::from_parts(vec![1; group.dual_partition_size().unwrap() as usize]);
            assert_eq!(
                bv_dual(&trivial, group).unwrap(),
                principal_partition(group).unwrap(),
                "{group}"
            );
        }
    }

    #[test]
    fn ls_dual_examples() {
        assert_eq!(ls_dual(&p("2,1,1"), GroupType::sp(2)).unwrap(), p("2,2"));
        assert_eq!(ls_dual(&p("2,2"), GroupType::sp(2)).unwrap(), p("2,2"));
        assert_eq!(ls_dual(&p("1^5"), GroupType::so_odd(2)).unwrap(), p("5"));
        assert_eq!(ls_dual(&p("3,1"), GroupType::type_a(4)).unwrap(), p("2,1,1"));
        assert!(ls_dual(&p("3,1"), GroupType::sp(2)).is_err());
        assert!(ls_dual(&p("2,2"), GroupType::metaplectic(2)).is_err());
    }

    #[test]
    fn duality_suite_small() {
        assert_eq!(run_duality_suite(8).unwrap(), vec![]);
        assert_eq!(run_duality_suite(0).unwrap(), vec![]);
    }

    #[test]
    fn round_trip_on_specials() {
        // [3,3,3] and [3,3,2] are swapped by the two directions
        assert_eq!(bv_dual(&p("3,3,2"), GroupType::so_odd(4)).unwrap(), p("3,3,3"));
        assert_eq!(bv_dual(&p("3,3,3"), GroupType::sp(4)).unwrap(), p("3,3,2"));
    }
}
