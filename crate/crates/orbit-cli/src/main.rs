//! Command-line front end for the partition calculus.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
//! 3 internal invariant violation. Errors print one machine-parsable line
//! to stderr: `error[kind]: detail`.

mod poset;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use orbit_partitions::{
    brute_extremum, bv_dual, bv_dual_traced, check_bound, enumerate_partitions, fourier_bound,
    is_generic, is_metaplectic_special, is_special, is_valid, ls_dual, metaplectic_expansion,
    nonsingular_bound, nonsingular_partition, parity_collapse, parse_factors, partition_of,
    principal_partition, run_duality_suite, run_oracle_suite, special_collapse, special_expansion,
    ArthurParameter, BoundOrder, Direction, Error, ExtremumPredicate, GroupKind, GroupType,
    Partition, DEFAULT_ENUMERATION_CAP,
};

#[derive(Parser)]
#[command(name = "orbits", version, about = "Partition calculus for nilpotent orbits of quasisplit classical groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a single partition
    Partition {
        #[command(subcommand)]
        op: PartitionOp,
    },
    /// Barbasch-Vogan dual of a dual-side partition
    Dual {
        #[arg(long)]
        group: String,
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Arthur parameters: validation, p(psi), and the Fourier bound
    Arthur {
        #[command(subcommand)]
        op: ArthurOp,
    },
    /// List partitions of the group's size
    Enumerate {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        #[arg(long)]
        json: bool,
    },
    /// DOT Hasse diagram of the dominance order on valid partitions
    Poset {
        #[arg(long)]
        group: String,
        /// Arthur parameter factors; marks the Fourier bound and fills
        /// every node below it
        #[arg(long)]
        highlight: Option<String>,
    },
    /// Cross-check the fast operations against the brute-force oracle
    Selfcheck {
        #[arg(long, default_value_t = 12)]
        max: u64,
    },
}

#[derive(Subcommand)]
enum PartitionOp {
    /// Largest valid partition below the input (the parity collapse)
    Collapse(GroupPartitionArgs),
    /// Largest special partition below the input, when unique
    SpecialCollapse(GroupPartitionArgs),
    /// Smallest special partition above the input
    Expand(GroupPartitionArgs),
    /// Smallest metaplectic-special partition above a symplectic input
    MetaplecticExpand {
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Young-diagram transpose
    Transpose {
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Validity and specialness of the input for the group
    Check(GroupPartitionArgs),
    /// Same-type Lusztig-Spaltenstein dual
    LsDual(GroupPartitionArgs),
    /// Dominance and lexicographic relation between two partitions
    Compare {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Partition of the regular nilpotent orbit
    Principal {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force dominance extremum (the normative oracle)
    Extremum {
        #[arg(long)]
        group: String,
        partition: String,
        #[arg(long, value_enum)]
        predicate: PredicateArg,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GroupPartitionArgs {
    #[arg(long)]
    group: String,
    partition: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ArthurOp {
    /// Check the well-formedness rules; lists violations
    Validate(ArthurArgs),
    /// The attached partition p(psi)
    Partition(ArthurArgs),
    /// The Fourier coefficient bound eta(p(psi))
    Bound(ArthurArgs),
    /// Compare a partition against the bound of the parameter
    Check {
        #[arg(long)]
        group: String,
        /// Inline factor grammar, e.g. `tau:a=3,orth,b=3 + pad:a=2,orth,b=1`
        #[arg(long)]
        param: String,
        partition: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Dominance)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// The non-singular partition and its special expansion
    Nonsingular {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ArthurArgs {
    #[arg(long)]
    group: String,
    /// Inline factor grammar, e.g. `tau:a=3,orth,b=3 + pad:a=2,orth,b=1`
    #[arg(long)]
    param: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Valid,
    Special,
    #[value(alias = "metaplectic_special")]
    MetaplecticSpecial,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    Valid,
    Special,
    #[value(alias = "metaplectic_special")]
    MetaplecticSpecial,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    MaxBelow,
    MinAbove,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Dominance,
    Lexicographic,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::from(0);
            }
            eprint!("error[usage]: {e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error[{}]: {e}", error_kind(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parity { .. } => "parity",
        Error::SizeMismatch { .. } => "size",
        Error::Invariant(_) | Error::NonUniqueExtremum { .. } => "invariant",
        Error::ParsePartition { .. } | Error::ParseParameter { .. } | Error::BadGroupTag(_)
        | Error::NegativePart(_) => "parse",
        Error::InvalidParameter(_) => "parameter",
        Error::CapExceeded { .. } => "usage",
        _ => "domain",
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) | Error::NonUniqueExtremum { .. } => 3,
        Error::CapExceeded { .. } => 1,
        _ => 2,
    }
}

fn parse_group(s: &str) -> Result<GroupType, Error> {
    s.parse()
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

/// Partitions render as their comma form; the empty one as `-`.
fn fmt(p: &Partition) -> String {
    if p.is_empty() {
        "-".to_string()
    } else {
        p.to_string()
    }
}

fn print_result(op: &str, group: Option<GroupType>, input: &Partition, output: &Partition, json: bool) {
    if json {
        let mut obj = json!({ "op": op, "input": input, "output": output });
        if let Some(g) = group {
            obj["group"] = json!(g);
        }
        println!("{obj}");
    } else {
        println!("{}", fmt(output));
    }
}

fn parse_parameter(group: &str, param: &str) -> Result<ArthurParameter, Error> {
    let group = parse_group(group)?;
    Ok(ArthurParameter::new(group, parse_factors(param)?))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Partition { op } => run_partition(op).map(|()| 0),
        Command::Dual { group, partition, json } => {
            let group = parse_group(&group)?;
            let q = parse_partition(&partition)?;
            if json {
                let trace = bv_dual_traced(&q, group)?;
                println!("{}", serde_json::to_string(&trace).expect("serializable"));
            } else {
                println!("{}", fmt(&bv_dual(&q, group)?));
            }
            Ok(0)
        }
        Command::Arthur { op } => run_arthur(op),
        Command::Enumerate { group, filter, json } => {
            let group = parse_group(&group)?;
            run_enumerate(group, filter, json).map(|()| 0)
        }
        Command::Poset { group, highlight } => {
            let group = parse_group(&group)?;
            let bound = match highlight {
                None => None,
                Some(param) => {
                    let psi = parse_parameter(&group.to_string(), &param)?;
                    Some(fourier_bound(&psi)?)
                }
            };
            print!("{}", poset::dot(group, bound.as_ref())?);
            Ok(0)
        }
        Command::Selfcheck { max } => run_selfcheck(max),
    }
}

fn run_partition(op: PartitionOp) -> Result<(), Error> {
    match op {
        PartitionOp::Collapse(a) => {
            let (group, p) = (parse_group(&a.group)?, parse_partition(&a.partition)?);
            print_result("collapse", Some(group), &p, &parity_collapse(&p, group)?, a.json);
        }
        PartitionOp::SpecialCollapse(a) => {
            let (group, p) = (parse_group(&a.group)?, parse_partition(&a.partition)?);
            print_result("special_collapse", Some(group), &p, &special_collapse(&p, group)?, a.json);
        }
        PartitionOp::Expand(a) => {
            let (group, p) = (parse_group(&a.group)?, parse_partition(&a.partition)?);
            print_result("expand", Some(group), &p, &special_expansion(&p, group)?, a.json);
        }
        PartitionOp::MetaplecticExpand { partition, json } => {
            let p = parse_partition(&partition)?;
            print_result("metaplectic_expand", None, &p, &metaplectic_expansion(&p)?, json);
        }
        PartitionOp::Transpose { partition, json } => {
            let p = parse_partition(&partition)?;
            print_result("transpose", None, &p, &p.transpose(), json);
        }
        PartitionOp::Check(a) => {
            let (group, p) = (parse_group(&a.group)?, parse_partition(&a.partition)?);
            let valid = is_valid(&p, group)?;
            let special = match (valid, group.kind()) {
                (false, _) | (_, GroupKind::MetaplecticSp) => None,
                _ => Some(is_special(&p, group)?),
            };
            let mspecial = match (valid, group.kind()) {
                (true, GroupKind::Sp | GroupKind::MetaplecticSp) => {
                    Some(is_metaplectic_special(&p)?)
                }
                _ => None,
            };
            if a.json {
                println!(
                    "{}",
                    json!({
                        "group": group, "input": p, "valid": valid,
                        "special": special, "metaplectic_special": mspecial,
                    })
                );
            } else {
                println!("valid: {valid}");
                if let Some(s) = special {
                    println!("special: {s}");
                }
                if let Some(m) = mspecial {
                    println!("metaplectic_special: {m}");
                }
            }
        }
        PartitionOp::LsDual(a) => {
            let (group, p) = (parse_group(&a.group)?, parse_partition(&a.partition)?);
            print_result("ls_dual", Some(group), &p, &ls_dual(&p, group)?, a.json);
        }
        PartitionOp::Compare { left, right, json } => {
            let (l, r) = (parse_partition(&left)?, parse_partition(&right)?);
            let dominance = if l.dominance_leq(&r)? && r.dominance_leq(&l)? {
                "equal"
            } else if l.dominance_leq(&r)? {
                "below"
            } else if r.dominance_leq(&l)? {
                "above"
            } else {
                "incomparable"
            };
            let lex = match l.lex_cmp(&r)? {
                std::cmp::Ordering::Less => "below",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "above",
            };
            if json {
                println!(
                    "{}",
                    json!({ "left": l, "right": r, "dominance": dominance, "lexicographic": lex })
                );
            } else {
                println!("dominance: {dominance}");
                println!("lexicographic: {lex}");
            }
        }
        PartitionOp::Principal { group, json } => {
            let group = parse_group(&group)?;
            let p = principal_partition(group)?;
            if json {
                println!("{}", json!({ "group": group, "output": p }));
            } else {
                println!("{}", fmt(&p));
            }
        }
        PartitionOp::Extremum { group, partition, predicate, direction, json } => {
            let (group, p) = (parse_group(&group)?, parse_partition(&partition)?);
            let predicate = match predicate {
                PredicateArg::Valid => ExtremumPredicate::Valid,
                PredicateArg::Special => ExtremumPredicate::Special,
                PredicateArg::MetaplecticSpecial => ExtremumPredicate::MetaplecticSpecial,
            };
            let direction = match direction {
                DirectionArg::MaxBelow => Direction::MaxBelow,
                DirectionArg::MinAbove => Direction::MinAbove,
            };
            let (q, unique) = brute_extremum(&p, group, predicate, direction)?;
            if json {
                println!(
                    "{}",
                    json!({ "group": group, "input": p, "output": q, "unique": unique })
                );
            } else {
                println!("{} (unique: {unique})", fmt(&q));
            }
        }
    }
    Ok(())
}

fn run_arthur(op: ArthurOp) -> Result<u8, Error> {
    match op {
        ArthurOp::Validate(a) => {
            let psi = parse_parameter(&a.group, &a.param)?;
            let violations = psi.validate();
            if a.json {
                println!(
                    "{}",
                    json!({ "parameter": psi, "valid": violations.is_empty(), "violations": violations })
                );
            } else if violations.is_empty() {
                println!("valid");
            } else {
                for v in &violations {
                    println!("violation: {v}");
                }
            }
            Ok(if violations.is_empty() { 0 } else { 2 })
        }
        ArthurOp::Partition(a) => {
            let psi = parse_parameter(&a.group, &a.param)?;
            let p = partition_of(&psi)?;
            if a.json {
                println!("{}", json!({ "parameter": psi, "partition": p }));
            } else {
                println!("{}", fmt(&p));
            }
            Ok(0)
        }
        ArthurOp::Bound(a) => {
            let psi = parse_parameter(&a.group, &a.param)?;
            let p = partition_of(&psi)?;
            let bound = fourier_bound(&psi)?;
            if a.json {
                println!(
                    "{}",
                    json!({
                        "parameter": psi, "generic": is_generic(&psi)?,
                        "partition": p, "bound": bound,
                    })
                );
            } else {
                println!("{}", fmt(&bound));
            }
            Ok(0)
        }
        ArthurOp::Check { group, param, partition, order, json } => {
            let psi = parse_parameter(&group, &param)?;
            let p = parse_partition(&partition)?;
            let order = match order {
                OrderArg::Dominance => BoundOrder::Dominance,
                OrderArg::Lexicographic => BoundOrder::Lexicographic,
            };
            let relation = check_bound(&p, &psi, order)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "parameter": psi, "partition": p,
                        "bound": fourier_bound(&psi)?, "relation": relation,
                    })
                );
            } else {
                println!("{relation}");
            }
            Ok(0)
        }
        ArthurOp::Nonsingular { group, json } => {
            let group = parse_group(&group)?;
            let p = nonsingular_partition(group)?;
            let bound = nonsingular_bound(group)?;
            if json {
                println!("{}", json!({ "group": group, "partition": p, "bound": bound }));
            } else {
                println!("partition: {}", fmt(&p));
                println!("bound: {}", fmt(&bound));
            }
            Ok(0)
        }
    }
}

fn run_enumerate(group: GroupType, filter: Filter, json: bool) -> Result<(), Error> {
    let size = group.partition_size();
    let all = enumerate_partitions(size, DEFAULT_ENUMERATION_CAP)?;
    let mut kept = Vec::new();
    for p in &all {
        let keep = match filter {
            Filter::All => true,
            Filter::Valid => is_valid(p, group)?,
            Filter::Special => match group.kind() {
                GroupKind::MetaplecticSp => {
                    return Err(Error::UnsupportedGroup {
                        op: "enumerate --filter special",
                        group: group.to_string(),
                    })
                }
                _ => is_valid(p, group)? && is_special(p, group)?,
            },
            Filter::MetaplecticSpecial => match group.kind() {
                GroupKind::Sp | GroupKind::MetaplecticSp => {
                    is_valid(p, group)? && is_metaplectic_special(p)?
                }
                _ => {
                    return Err(Error::UnsupportedGroup {
                        op: "enumerate --filter metaplectic-special",
                        group: group.to_string(),
                    })
                }
            },
        };
        if keep {
            kept.push(p.clone());
        }
    }
    if json {
        println!("{}", json!({ "group": group, "count": kept.len(), "partitions": kept }));
    } else {
        println!("count: {}", kept.len());
        println!(
            "{}",
            kept.iter().map(fmt).collect::<Vec<_>>().join("; ")
        );
    }
    Ok(())
}

fn run_selfcheck(max: u64) -> Result<u8, Error> {
    let mut report = run_oracle_suite(max)?;
    report.target = "selfcheck".to_string();
    report.counterexamples.extend(run_duality_suite(max)?);
    report.agree = report.counterexamples.is_empty() && report.uniqueness_failures.is_empty();
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(if report.agree { 0 } else { 3 })
}
