//! Parity collapse, special collapse and expansion, the metaplectic-special
//! expansion, and the exhaustive brute-force oracle that certifies them.
//!
//! The normative definition of every operation here is a dominance extremum
//! over the full partition enumeration. `parity_collapse` and
//! `special_expansion` additionally have fast greedy implementations; the
//! oracle suite checks them against `brute_extremum` exhaustively.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    is_metaplectic_special, is_special, is_valid, GroupKind, GroupType, Parity,
};
use crate::partition::{enumerate_partitions, Partition, DEFAULT_ENUMERATION_CAP};

/// Greedy unit-move collapse: while some wrong-parity part occurs an odd
/// number of times, lower the last copy of the largest such part by one box
/// and re-attach the box at the first later row that can take it.
fn greedy_parity_collapse(p: &Partition, parity: Parity) -> Partition {
    let wrong = match parity {
        Parity::Symplectic => 1,
        Parity::Orthogonal => 0,
    };
    let mut parts = p.parts().to_vec();
    loop {
        // largest wrong-parity value with odd multiplicity, and its last index
        let mut target: Option<(u32, usize)> = None;
        let mut i = 0;
        while i < parts.len() {
            let v = parts[i];
            let mut j = i;
            while j < parts.len() && parts[j] == v {
                j += 1;
            }
            if v % 2 == wrong && (j - i) % 2 == 1 {
                target = Some((v, j - 1));
                break; // parts are sorted, the first hit is the largest
            }
            i = j;
        }
        let Some((u, i)) = target else {
            break;
        };
        parts[i] = u - 1;
        if parts[i] == 0 {
            parts.remove(i);
            parts.push(1);
        } else {
            match (i + 1..parts.len()).find(|&j| parts[j] < u - 1) {
                Some(j) => parts[j] += 1,
                None => parts.push(1),
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&x| x > 0);
    }
    Partition::from_parts(parts)
}

fn check_group_size(p: &Partition, group: GroupType) -> Result<()> {
    if p.size() != group.partition_size() {
        return Err(Error::SizeMismatch {
            expected: group.partition_size(),
            actual: p.size(),
        });
    }
    Ok(())
}

/// The biggest G-partition dominated by `p` (the classical G-collapse).
/// Fixes valid inputs; the type A collapse is the identity.
pub fn parity_collapse(p: &Partition, group: GroupType) -> Result<Partition> {
    check_group_size(p, group)?;
    match group.parity() {
        None => Ok(p.clone()),
        Some(parity) => Ok(greedy_parity_collapse(p, parity)),
    }
}

/// The biggest special G-partition dominated by `p`, when it is unique.
///
/// Unlike the parity collapse, the maximum here can genuinely fail to be
/// unique (e.g. both `[6,2,2,2]` and `[4,4,4]` are maximal special
/// symplectic partitions below `[6,3,3]`); such inputs yield a
/// `NonUniqueExtremum` error rather than an arbitrary choice.
pub fn special_collapse(p: &Partition, group: GroupType) -> Result<Partition> {
    check_group_size(p, group)?;
    match group.kind() {
        GroupKind::TypeA => Ok(p.clone()),
        GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
            op: "special_collapse",
            group: group.to_string(),
        }),
        _ => scan_extremum(
            p,
            Direction::MaxBelow,
            "special_collapse",
            |q| is_special(q, group).unwrap_or(false),
        ),
    }
}

/// The smallest special G-partition dominating `p`, when it is unique.
/// Fixes special inputs. For valid inputs the minimum always exists and is
/// unique; for invalid inputs of the right size it may not be, in which
/// case a `NonUniqueExtremum` error is returned.
pub fn special_expansion(p: &Partition, group: GroupType) -> Result<Partition> {
    check_group_size(p, group)?;
    match group.kind() {
        GroupKind::TypeA => Ok(p.clone()),
        GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
            op: "special_expansion",
            group: group.to_string(),
        }),
        _ => {
            if is_valid(p, group)? {
                // On valid inputs the expansion transports through the
                // transpose: q >= p iff q^t <= p^t, and q is special iff
                // q^t satisfies the transpose parity, so the minimum is the
                // transposed collapse of the transpose.
                let sigma = group.special_transpose_parity()?;
                let result = greedy_parity_collapse(&p.transpose(), sigma).transpose();
                if !is_special(&result, group)? || !p.dominance_leq(&result)? {
                    return Err(Error::Invariant(format!(
                        "special_expansion({p}) produced {result}, which is not a special partition above the input"
                    )));
                }
                Ok(result)
            } else {
                scan_extremum(p, Direction::MinAbove, "special_expansion", |q| {
                    is_special(q, group).unwrap_or(false)
                })
            }
        }
    }
}

/// The smallest metaplectic-special partition dominating the symplectic
/// partition `p` (non-strictly). Errors on the empty partition (no
/// metaplectic-special partition of 0 exists) and on inputs where the
/// minimum is not unique.
pub fn metaplectic_expansion(p: &Partition) -> Result<Partition> {
    let group = GroupType::metaplectic((p.size() / 2) as u32);
    if !is_valid(p, group)? {
        return Err(Error::Parity {
            partition: p.to_string(),
            constraint: "symplectic",
            context: "metaplectic expansion".to_string(),
        });
    }
    scan_extremum(p, Direction::MinAbove, "metaplectic_expansion", |q| {
        is_metaplectic_special(q).unwrap_or(false)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    MaxBelow,
    MinAbove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremumPredicate {
    Valid,
    Special,
    MetaplecticSpecial,
}

/// Streaming extremum: walk the enumeration in the direction's lex order.
/// The first matching candidate is the lex extremum, which must be the
/// dominance extremum if one exists (dominance refines lex); every later
/// candidate is checked against it, and any incomparable one is a witness
/// of non-uniqueness.
fn scan_extremum<F>(
    p: &Partition,
    direction: Direction,
    op: &'static str,
    pred: F,
) -> Result<Partition>
where
    F: Fn(&Partition) -> bool,
{
    let all = enumerate_partitions(p.size(), DEFAULT_ENUMERATION_CAP)?;
    let mut best: Option<Partition> = None;
    let mut witnesses: Vec<Partition> = Vec::new();
    let iter: Box<dyn Iterator<Item = &Partition>> = match direction {
        Direction::MaxBelow => Box::new(all.iter()),
        Direction::MinAbove => Box::new(all.iter().rev()),
    };
    for q in iter {
        let related = match direction {
            Direction::MaxBelow => q.dominance_leq(p)?,
            Direction::MinAbove => p.dominance_leq(q)?,
        };
        if !related || !pred(q) {
            continue;
        }
        match &best {
            None => best = Some(q.clone()),
            Some(b) => {
                let dominated = match direction {
                    Direction::MaxBelow => q.dominance_leq(b)?,
                    Direction::MinAbove => b.dominance_leq(q)?,
                };
                if !dominated {
                    witnesses.push(q.clone());
                }
            }
        }
    }
    match best {
        None => Err(Error::EmptyCandidateSet {
            op,
            input: p.to_string(),
        }),
        Some(b) => {
            if witnesses.is_empty() {
                Ok(b)
            } else {
                witnesses.insert(0, b);
                Err(Error::NonUniqueExtremum {
                    op,
                    input: p.to_string(),
                    witnesses: witnesses
                        .iter()
                        .map(|w| format!("[{w}]"))
                        .collect::<Vec<_>>()
                        .join(" "),
                })
            }
        }
    }
}

/// All dominance-maximal (resp. minimal) partitions of `size(p)` that
/// satisfy the predicate and lie below (resp. above) `p`. This is the
/// normative oracle: plain enumeration, filtering, and pairwise maximality.
pub fn brute_extrema(
    p: &Partition,
    group: GroupType,
    predicate: ExtremumPredicate,
    direction: Direction,
) -> Result<Vec<Partition>> {
    brute_extrema_with(p, group, predicate, direction, &|q, g| is_special(q, g))
}

fn brute_extrema_with(
    p: &Partition,
    group: GroupType,
    predicate: ExtremumPredicate,
    direction: Direction,
    special_fn: &dyn Fn(&Partition, GroupType) -> Result<bool>,
) -> Result<Vec<Partition>> {
    check_group_size(p, group)?;
    let all = enumerate_partitions(p.size(), DEFAULT_ENUMERATION_CAP)?;
    let mut candidates = Vec::new();
    for q in &all {
        let keep = match predicate {
            ExtremumPredicate::Valid => is_valid(q, group)?,
            ExtremumPredicate::Special => match group.kind() {
                GroupKind::TypeA => true,
                GroupKind::MetaplecticSp => {
                    return Err(Error::UnsupportedGroup {
                        op: "brute_extremum(special)",
                        group: group.to_string(),
                    })
                }
                _ => is_valid(q, group)? && special_fn(q, group)?,
            },
            ExtremumPredicate::MetaplecticSpecial => match group.kind() {
                GroupKind::Sp | GroupKind::MetaplecticSp => {
                    is_valid(q, group)? && is_metaplectic_special(q)?
                }
                _ => {
                    return Err(Error::UnsupportedGroup {
                        op: "brute_extremum(metaplectic_special)",
                        group: group.to_string(),
                    })
                }
            },
        };
        let related = match direction {
            Direction::MaxBelow => q.dominance_leq(p)?,
            Direction::MinAbove => p.dominance_leq(q)?,
        };
        if keep && related {
            candidates.push(q.clone());
        }
    }
    let mut extrema = Vec::new();
    for q in &candidates {
        let mut extremal = true;
        for r in &candidates {
            if r == q {
                continue;
            }
            let beats = match direction {
                Direction::MaxBelow => q.dominance_leq(r)?,
                Direction::MinAbove => r.dominance_leq(q)?,
            };
            if beats {
                extremal = false;
                break;
            }
        }
        if extremal {
            extrema.push(q.clone());
        }
    }
    Ok(extrema)
}

/// The brute-force extremum together with a uniqueness verdict. When the
/// extremum is not unique, the lex-extreme representative is returned with
/// `unique = false`.
pub fn brute_extremum(
    p: &Partition,
    group: GroupType,
    predicate: ExtremumPredicate,
    direction: Direction,
) -> Result<(Partition, bool)> {
    let extrema = brute_extrema(p, group, predicate, direction)?;
    match extrema.len() {
        0 => Err(Error::EmptyCandidateSet {
            op: "brute_extremum",
            input: p.to_string(),
        }),
        n => Ok((extrema[0].clone(), n == 1)),
    }
}

/// One disagreement between a production operation and the brute oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub op: String,
    pub group: String,
    pub input: Partition,
    pub fast_result: String,
    pub oracle_result: String,
}

/// An input where an extremum required to be unique was not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessFailure {
    pub op: String,
    pub group: String,
    pub input: Partition,
    pub extrema: Vec<Partition>,
}

/// Result of an exhaustive cross-check of the fast operations against the
/// brute-force oracle.
///
/// `uniqueness_failures` records inputs where an operation whose extremum is
/// contractually unique (the parity collapse everywhere, the special
/// expansion on valid inputs) had more than one extremal element. For the
/// special collapse and the metaplectic expansion a non-unique extremum is a
/// legitimate outcome; those count as agreement when the fast path reports
/// it too, and as counterexamples otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub target: String,
    pub sizes_checked: Vec<u64>,
    pub agree: bool,
    pub counterexamples: Vec<Counterexample>,
    pub uniqueness_failures: Vec<UniquenessFailure>,
}

/// Comparable outcome of an extremum computation.
#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    One(Partition),
    NonUnique(Vec<Partition>),
    Empty,
}

fn fast_outcome(r: Result<Partition>) -> Result<Outcome> {
    match r {
        Ok(p) => Ok(Outcome::One(p)),
        Err(Error::NonUniqueExtremum { .. }) => Ok(Outcome::NonUnique(Vec::new())),
        Err(Error::EmptyCandidateSet { .. }) => Ok(Outcome::Empty),
        Err(e) => Err(e),
    }
}

fn oracle_outcome(extrema: Vec<Partition>) -> Outcome {
    match extrema.len() {
        0 => Outcome::Empty,
        1 => Outcome::One(extrema.into_iter().next().unwrap()),
        _ => Outcome::NonUnique(extrema),
    }
}

fn outcome_desc(o: &Outcome) -> String {
    match o {
        Outcome::One(p) => format!("[{p}]"),
        Outcome::NonUnique(ws) if ws.is_empty() => "non-unique extremum".to_string(),
        Outcome::NonUnique(ws) => format!(
            "non-unique extremum: {}",
            ws.iter().map(|w| format!("[{w}]")).collect::<Vec<_>>().join(" ")
        ),
        Outcome::Empty => "empty candidate set".to_string(),
    }
}

fn outcomes_agree(fast: &Outcome, oracle: &Outcome) -> bool {
    match (fast, oracle) {
        (Outcome::One(a), Outcome::One(b)) => a == b,
        (Outcome::NonUnique(_), Outcome::NonUnique(_)) => true,
        (Outcome::Empty, Outcome::Empty) => true,
        _ => false,
    }
}

/// Runs the full oracle suite: for every group type and every input of
/// every size up to `max_size`, compares `parity_collapse`,
/// `special_collapse`, `special_expansion` and `metaplectic_expansion`
/// against the brute-force extremum.
pub fn run_oracle_suite(max_size: u64) -> Result<OracleReport> {
    run_oracle_suite_with(max_size, &|q, g| is_special(q, g))
}

/// Oracle suite with an injectable specialness predicate on the oracle
/// side. Used by tests to prove the suite detects a corrupted predicate.
pub fn run_oracle_suite_with(
    max_size: u64,
    special_fn: &dyn Fn(&Partition, GroupType) -> Result<bool>,
) -> Result<OracleReport> {
    let mut report = OracleReport {
        target: "oracle_suite".to_string(),
        sizes_checked: (0..=max_size).collect(),
        agree: true,
        counterexamples: Vec::new(),
        uniqueness_failures: Vec::new(),
    };
    for size in 0..=max_size {
        let groups: Vec<GroupType> = if size % 2 == 0 {
            vec![
                GroupType::sp((size / 2) as u32),
                GroupType::so_even((size / 2) as u32),
            ]
        } else {
            vec![GroupType::so_odd(((size - 1) / 2) as u32)]
        };
        let all = enumerate_partitions(size, size.max(DEFAULT_ENUMERATION_CAP))?;
        for group in groups {
            for p in &all {
                let valid = is_valid(p, group)?;

                // parity collapse: unique everywhere
                let fast = fast_outcome(parity_collapse(p, group))?;
                let extrema = brute_extrema_with(
                    p,
                    group,
                    ExtremumPredicate::Valid,
                    Direction::MaxBelow,
                    special_fn,
                )?;
                record(&mut report, "parity_collapse", group, p, &fast, extrema, true);

                // special collapse: extremum may legitimately be non-unique
                let fast = fast_outcome(special_collapse(p, group))?;
                let extrema = brute_extrema_with(
                    p,
                    group,
                    ExtremumPredicate::Special,
                    Direction::MaxBelow,
                    special_fn,
                )?;
                record(&mut report, "special_collapse", group, p, &fast, extrema, false);

                // special expansion: unique on valid inputs
                let fast = fast_outcome(special_expansion(p, group))?;
                let extrema = brute_extrema_with(
                    p,
                    group,
                    ExtremumPredicate::Special,
                    Direction::MinAbove,
                    special_fn,
                )?;
                record(&mut report, "special_expansion", group, p, &fast, extrema, valid);

                // metaplectic expansion: symplectic inputs only
                if group.kind() == GroupKind::Sp && valid {
                    let fast = fast_outcome(metaplectic_expansion(p))?;
                    let extrema = brute_extrema_with(
                        p,
                        GroupType::metaplectic(group.rank_param()),
                        ExtremumPredicate::MetaplecticSpecial,
                        Direction::MinAbove,
                        special_fn,
                    )?;
                    record(&mut report, "metaplectic_expansion", group, p, &fast, extrema, false);
                }
            }
        }
    }
    report.agree = report.counterexamples.is_empty() && report.uniqueness_failures.is_empty();
    Ok(report)
}

fn record(
    report: &mut OracleReport,
    op: &str,
    group: GroupType,
    input: &Partition,
    fast: &Outcome,
    oracle_extrema: Vec<Partition>,
    must_be_unique: bool,
) {
    if must_be_unique && oracle_extrema.len() > 1 {
        report.uniqueness_failures.push(UniquenessFailure {
            op: op.to_string(),
            group: group.to_string(),
            input: input.clone(),
            extrema: oracle_extrema.clone(),
        });
    }
    let oracle = oracle_outcome(oracle_extrema);
    if !outcomes_agree(fast, &oracle) {
        report.counterexamples.push(Counterexample {
            op: op.to_string(),
            group: group.to_string(),
            input: input.clone(),
            fast_result: outcome_desc(fast),
            oracle_result: outcome_desc(&oracle),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parity_collapse_examples() {
        assert_eq!(parity_collapse(&p("3,1"), GroupType::sp(2)).unwrap(), p("2,2"));
        assert_eq!(
            parity_collapse(&p("3,3,3,1,1,1"), GroupType::sp(6)).unwrap(),
            p("3,3,2,2,1,1")
        );
        assert_eq!(
            parity_collapse(&p("4,3,2"), GroupType::so_odd(4)).unwrap(),
            p("3,3,3")
        );
        // fixes valid inputs
        assert_eq!(parity_collapse(&p("2,2"), GroupType::sp(2)).unwrap(), p("2,2"));
        assert!(parity_collapse(&p("3,1"), GroupType::sp(3)).is_err());
    }

    #[test]
    fn special_collapse_examples() {
        assert_eq!(
            special_collapse(&p("2,1,1"), GroupType::sp(2)).unwrap(),
            p("1,1,1,1")
        );
        assert_eq!(
            special_collapse(&p("3,3,2"), GroupType::sp(4)).unwrap(),
            p("3,3,2")
        );
        // coincides with the parity collapse on the paper's Case I input
        assert_eq!(
            special_collapse(&p("3,3,3,1,1,1"), GroupType::sp(6)).unwrap(),
            p("3,3,2,2,1,1")
        );
    }

    #[test]
    fn special_collapse_can_be_non_unique() {
        // Both [6,2,2,2] and [4,4,4] are maximal special symplectic
        // partitions below [6,3,3].
        let err = special_collapse(&p("6,3,3"), GroupType::sp(6)).unwrap_err();
        assert!(matches!(err, Error::NonUniqueExtremum { .. }), "{err}");
        let extrema = brute_extrema(
            &p("6,3,3"),
            GroupType::sp(6),
            ExtremumPredicate::Special,
            Direction::MaxBelow,
        )
        .unwrap();
        assert_eq!(extrema, vec![p("6,2,2,2"), p("4,4,4")]);
    }

    #[test]
    fn special_expansion_examples() {
        assert_eq!(
            special_expansion(&p("6,3,3"), GroupType::sp(6)).unwrap(),
            p("6,4,2")
        );
        assert_eq!(
            special_expansion(&p("2,2,2,2,1"), GroupType::so_odd(4)).unwrap(),
            p("3,2,2,1,1")
        );
        assert_eq!(special_expansion(&p("4"), GroupType::sp(2)).unwrap(), p("4"));
    }

    #[test]
    fn metaplectic_expansion_examples() {
        assert_eq!(metaplectic_expansion(&p("2,2")).unwrap(), p("4"));
        assert_eq!(metaplectic_expansion(&p("2,1,1")).unwrap(), p("2,1,1"));
        assert_eq!(metaplectic_expansion(&p("1,1,1,1")).unwrap(), p("2,1,1"));
        // no metaplectic-special partition of 0 exists
        assert!(matches!(
            metaplectic_expansion(&Partition::empty()),
            Err(Error::EmptyCandidateSet { .. })
        ));
        assert!(metaplectic_expansion(&p("3,1")).is_err());
    }

    #[test]
    fn brute_extremum_examples() {
        let (q, unique) = brute_extremum(
            &p("3,1"),
            GroupType::sp(2),
            ExtremumPredicate::Valid,
            Direction::MaxBelow,
        )
        .unwrap();
        assert_eq!((q, unique), (p("2,2"), true));
        let (q, unique) = brute_extremum(
            &p("4"),
            GroupType::sp(2),
            ExtremumPredicate::Valid,
            Direction::MaxBelow,
        )
        .unwrap();
        assert_eq!((q, unique), (p("4"), true));
        let (q, unique) = brute_extremum(
            &p("2,2"),
            GroupType::sp(2),
            ExtremumPredicate::Special,
            Direction::MinAbove,
        )
        .unwrap();
        assert_eq!((q, unique), (p("2,2"), true));
    }

    #[test]
    fn oracle_suite_small() {
        let report = run_oracle_suite(8).unwrap();
        assert!(report.agree, "{report:?}");
        assert!(report.counterexamples.is_empty());
        assert!(report.uniqueness_failures.is_empty());

        let vacuous = run_oracle_suite(0).unwrap();
        assert!(vacuous.agree);
    }

    #[test]
    fn oracle_suite_detects_corrupted_predicate() {
        // Flip the Sp specialness criterion to "transpose has even parts
        // with even multiplicity": [2,1,1] then wrongly counts as special
        // and the suite must surface a size-4 counterexample.
        let corrupted = |q: &Partition, g: GroupType| -> Result<bool> {
            if g.kind() == GroupKind::Sp {
                Ok(Parity::Orthogonal.admits(&q.transpose()))
            } else {
                is_special(q, g)
            }
        };
        let report = run_oracle_suite_with(4, &corrupted).unwrap();
        assert!(!report.agree);
        assert!(report
            .counterexamples
            .iter()
            .any(|c| c.input == p("2,1,1") && c.group == "Sp:4"));
    }
}
