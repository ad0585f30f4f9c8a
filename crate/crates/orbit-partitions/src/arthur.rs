//! Formal Arthur parameters, the attached partition p(psi), the Fourier
//! coefficient bound eta(p(psi)), and the closed-form bound families used
//! as golden references for the duality recipes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::collapse::special_expansion;
use crate::duality::bv_dual;
use crate::error::{Error, Result};
use crate::group::{is_valid, principal_partition, GroupKind, GroupType};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TauSymmetry {
    Orthogonal,
    Symplectic,
}

impl TauSymmetry {
    pub fn opposite(self) -> TauSymmetry {
        match self {
            TauSymmetry::Orthogonal => TauSymmetry::Symplectic,
            TauSymmetry::Symplectic => TauSymmetry::Orthogonal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TauSymmetry::Orthogonal => "orthogonal",
            TauSymmetry::Symplectic => "symplectic",
        }
    }
}

/// One simple factor (tau, b): a stand-in label for the cuspidal datum, the
/// GL dimension `a`, the multiplicity `b`, and the symmetry type of tau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub label: String,
    pub a: u32,
    pub b: u32,
    pub symmetry: TauSymmetry,
}

impl SimpleFactor {
    pub fn new(label: &str, a: u32, symmetry: TauSymmetry, b: u32) -> Self {
        SimpleFactor {
            label: label.to_string(),
            a,
            b,
            symmetry,
        }
    }

    /// Symmetry of the factor as a dual-group representation: the symmetry
    /// of tau itself for odd b, the opposite one for even b.
    pub fn factor_type(&self) -> TauSymmetry {
        if self.b % 2 == 1 {
            self.symmetry
        } else {
            self.symmetry.opposite()
        }
    }
}

/// A formal sum of simple factors attached to a classical group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArthurParameter {
    pub group: GroupType,
    pub factors: Vec<SimpleFactor>,
}

/// One violated well-formedness rule, naming the offending factor when
/// there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub factor: Option<String>,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.factor {
            Some(label) => write!(f, "factor `{label}`: {}", self.rule),
            None => write!(f, "{}", self.rule),
        }
    }
}

/// Symmetry every factor must have as a dual-group representation:
/// orthogonal when the dual group is odd orthogonal (group Sp) or even
/// orthogonal (group SO_even), symplectic when it is symplectic (SO_odd).
fn required_factor_type(group: GroupType) -> Result<TauSymmetry> {
    match group.kind() {
        GroupKind::Sp | GroupKind::SoEven => Ok(TauSymmetry::Orthogonal),
        GroupKind::SoOdd => Ok(TauSymmetry::Symplectic),
        _ => Err(Error::UnsupportedGroup {
            op: "arthur_parameter",
            group: group.to_string(),
        }),
    }
}

impl ArthurParameter {
    pub fn new(group: GroupType, factors: Vec<SimpleFactor>) -> Self {
        ArthurParameter { group, factors }
    }

    /// Checks every well-formedness rule, returning all violations.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let push = |out: &mut Vec<Violation>, factor: Option<&str>, rule: String| {
            out.push(Violation {
                factor: factor.map(str::to_string),
                rule,
            });
        };
        let required = match required_factor_type(self.group) {
            Ok(r) => Some(r),
            Err(_) => {
                push(
                    &mut out,
                    None,
                    format!("group {} does not carry Arthur parameters", self.group),
                );
                None
            }
        };
        if self.factors.is_empty() {
            push(&mut out, None, "factor list is empty".to_string());
        }
        for f in &self.factors {
            if f.a == 0 {
                push(&mut out, Some(&f.label), "a must be positive".to_string());
            }
            if f.b == 0 {
                push(&mut out, Some(&f.label), "b must be positive".to_string());
            }
            if let Some(required) = required {
                if f.factor_type() != required {
                    push(
                        &mut out,
                        Some(&f.label),
                        format!(
                            "factor_type {} differs from the required {}",
                            f.factor_type().name(),
                            required.name()
                        ),
                    );
                }
            }
        }
        if let Ok(expected) = self.group.dual_partition_size() {
            let total: u64 = self.factors.iter().map(|f| f.a as u64 * f.b as u64).sum();
            if total != expected {
                push(
                    &mut out,
                    None,
                    format!("sum of a*b is {total}, expected {expected}"),
                );
            }
        }
        for (i, f) in self.factors.iter().enumerate() {
            for g in &self.factors[i + 1..] {
                if f.label == g.label && f.b == g.b {
                    push(
                        &mut out,
                        Some(&f.label),
                        format!("duplicate (label, b) pair with b={}", f.b),
                    );
                }
            }
        }
        out
    }

    fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(
                violations
                    .iter()
                    .map(Violation::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
            ))
        }
    }

    /// The simple-type parameter: one factor (tau, b) with a*b boxes.
    pub fn simple(group: GroupType, a: u32, b: u32) -> Result<Self> {
        let required = required_factor_type(group)?;
        let symmetry = if b % 2 == 1 { required } else { required.opposite() };
        Ok(ArthurParameter::new(
            group,
            vec![SimpleFactor::new("tau", a, symmetry, b)],
        ))
    }

    /// The generic parameter: a single factor with b = 1.
    pub fn generic(group: GroupType) -> Result<Self> {
        let size = group.dual_partition_size()? as u32;
        ArthurParameter::simple(group, size, 1)
    }

    /// Case I family on Sp(ab+m): (tau, 2b+1) with an orthogonal tau of
    /// dimension a, padded by generic factors of total dimension 2m+1-a.
    pub fn case_i(a: u32, b: u32, m: u32) -> Result<Self> {
        if a == 0 || b == 0 || a > 2 * m + 1 {
            return Err(Error::InvalidParameter(format!(
                "case I needs 1 <= a <= 2m+1 and b >= 1, got a={a}, b={b}, m={m}"
            )));
        }
        let group = GroupType::sp(a * b + m);
        let mut factors = vec![SimpleFactor::new("tau", a, TauSymmetry::Orthogonal, 2 * b + 1)];
        let rest = 2 * m + 1 - a;
        if rest > 0 {
            factors.push(SimpleFactor::new("pad", rest, TauSymmetry::Orthogonal, 1));
        }
        Ok(ArthurParameter::new(group, factors))
    }

    /// Case III family on Sp(2kb+m): (tau, 2b) with a symplectic tau of
    /// dimension 2k, padded by generic factors of total dimension 2m+1.
    pub fn case_iii(k: u32, b: u32, m: u32) -> Result<Self> {
        if k == 0 || b == 0 {
            return Err(Error::InvalidParameter(format!(
                "case III needs k, b >= 1, got k={k}, b={b}"
            )));
        }
        let group = GroupType::sp(2 * k * b + m);
        let factors = vec![
            SimpleFactor::new("tau", 2 * k, TauSymmetry::Symplectic, 2 * b),
            SimpleFactor::new("pad", 2 * m + 1, TauSymmetry::Orthogonal, 1),
        ];
        Ok(ArthurParameter::new(group, factors))
    }
}

/// p(psi): the multiset with a_i copies of b_i.
pub fn partition_of(psi: &ArthurParameter) -> Result<Partition> {
    psi.ensure_valid()?;
    let mut parts = Vec::new();
    for f in &psi.factors {
        parts.extend(std::iter::repeat(f.b).take(f.a as usize));
    }
    Ok(Partition::from_parts(parts))
}

/// A parameter is generic when every multiplicity b is 1.
pub fn is_generic(psi: &ArthurParameter) -> Result<bool> {
    psi.ensure_valid()?;
    Ok(psi.factors.iter().all(|f| f.b == 1))
}

/// The Fourier coefficient bound eta(p(psi)): the Barbasch-Vogan dual of
/// the attached partition, always a valid special partition for the group.
pub fn fourier_bound(psi: &ArthurParameter) -> Result<Partition> {
    bv_dual(&partition_of(psi)?, psi.group)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundOrder {
    Dominance,
    Lexicographic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundComparison {
    Below,
    Equal,
    Above,
    Incomparable,
}

impl fmt::Display for BoundComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundComparison::Below => "below",
            BoundComparison::Equal => "equal",
            BoundComparison::Above => "above",
            BoundComparison::Incomparable => "incomparable",
        };
        write!(f, "{s}")
    }
}

/// Relation of the valid G-partition `p` to fourier_bound(psi) in the
/// chosen order. The lexicographic order is total, so it never returns
/// `Incomparable`.
pub fn check_bound(
    p: &Partition,
    psi: &ArthurParameter,
    order: BoundOrder,
) -> Result<BoundComparison> {
    if !is_valid(p, psi.group)? {
        return Err(Error::Parity {
            partition: p.to_string(),
            constraint: psi
                .group
                .parity()
                .map(crate::group::Parity::name)
                .unwrap_or("unconstrained"),
            context: format!("check_bound for {}", psi.group),
        });
    }
    let bound = fourier_bound(psi)?;
    if *p == bound {
        return Ok(BoundComparison::Equal);
    }
    Ok(match order {
        BoundOrder::Dominance => {
            if p.dominance_leq(&bound)? {
                BoundComparison::Below
            } else if bound.dominance_leq(p)? {
                BoundComparison::Above
            } else {
                BoundComparison::Incomparable
            }
        }
        BoundOrder::Lexicographic => match p.lex_cmp(&bound)? {
            std::cmp::Ordering::Less => BoundComparison::Below,
            std::cmp::Ordering::Equal => BoundComparison::Equal,
            std::cmp::Ordering::Greater => BoundComparison::Above,
        },
    })
}

fn repeat(v: u32, k: u32) -> impl Iterator<Item = u32> {
    std::iter::repeat(v).take(k as usize)
}

/// Closed form of the bound for the simple-type parameter (tau, b) with
/// dim tau = a. Legality: Sp needs ab = 2n+1 with a, b odd; the orthogonal
/// groups need ab = 2n, with a even whenever the dual-side part b would
/// otherwise appear with odd multiplicity (b odd for SO_odd, b even for
/// SO_even).
pub fn simple_type_eta(group: GroupType, a: u32, b: u32) -> Result<Partition> {
    let illegal = |why: &str| {
        Err(Error::InvalidParameter(format!(
            "simple type (a={a}, b={b}) is illegal for {group}: {why}"
        )))
    };
    if a == 0 || b == 0 {
        return illegal("a and b must be positive");
    }
    if (a as u64) * (b as u64) != group.dual_partition_size()? {
        return illegal("a*b must match the dual-side partition size");
    }
    match group.kind() {
        GroupKind::Sp => {
            if a % 2 == 0 || b % 2 == 0 {
                return illegal("a and b must both be odd");
            }
            Ok(Partition::from_parts(repeat(a, b - 1).chain([a - 1])))
        }
        GroupKind::SoOdd => {
            if b % 2 == 1 && a % 2 == 1 {
                return illegal("odd b needs even a");
            }
            Ok(if b % 2 == 1 {
                Partition::from_parts([a + 1].into_iter().chain(repeat(a, b - 1)))
            } else if a % 2 == 0 {
                Partition::from_parts(
                    [a + 1].into_iter().chain(repeat(a, b - 2)).chain([a - 1, 1]),
                )
            } else {
                Partition::from_parts(repeat(a, b).chain([1]))
            })
        }
        GroupKind::SoEven => {
            // dual-side parity forces a even in both branches: for odd b
            // because ab is even, for even b because the part b occurs a
            // times in p(psi)
            if a % 2 == 1 {
                return illegal("a must be even");
            }
            Ok(if b % 2 == 0 {
                Partition::from_parts(repeat(a, b))
            } else {
                Partition::from_parts(repeat(a, b - 1).chain([a - 1, 1]))
            })
        }
        _ => Err(Error::UnsupportedGroup {
            op: "simple_type_eta",
            group: group.to_string(),
        }),
    }
}

/// Closed form of the Case I bound on Sp(ab+m), for 1 <= a <= 2m+1.
pub fn case_i_eta(a: u32, b: u32, m: u32) -> Result<Partition> {
    if a == 0 || b == 0 || a > 2 * m + 1 {
        return Err(Error::InvalidParameter(format!(
            "case I needs 1 <= a <= 2m+1 and b >= 1, got a={a}, b={b}, m={m}"
        )));
    }
    Ok(if a == 2 * m + 1 {
        Partition::from_parts(repeat(a, 2 * b).chain([2 * m]))
    } else if a % 2 == 0 {
        Partition::from_parts([2 * m].into_iter().chain(repeat(a, 2 * b)))
    } else {
        Partition::from_parts(
            [2 * m, a + 1]
                .into_iter()
                .chain(repeat(a, 2 * b - 2))
                .chain([a - 1]),
        )
    })
}

/// Closed form of the Case III bound on Sp(2kb+m).
pub fn case_iii_eta(k: u32, b: u32, m: u32) -> Result<Partition> {
    if k == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!(
            "case III needs k, b >= 1, got k={k}, b={b}"
        )));
    }
    Ok(Partition::from_parts(
        [2 * k + 2 * m].into_iter().chain(repeat(2 * k, 2 * b - 1)),
    ))
}

/// The non-singular partition p_ns: the level at which cuspidal forms are
/// guaranteed nonzero Fourier coefficients.
pub fn nonsingular_partition(group: GroupType) -> Result<Partition> {
    let n = group.rank_param();
    match group.kind() {
        GroupKind::Sp => Ok(Partition::from_parts(repeat(2, n))),
        GroupKind::SoOdd => Ok(if n % 2 == 0 {
            Partition::from_parts(repeat(2, n).chain([1]))
        } else {
            Partition::from_parts(repeat(2, n - 1).chain([1, 1, 1]))
        }),
        GroupKind::SoEven => Ok(if n % 2 == 0 {
            Partition::from_parts(repeat(2, n))
        } else {
            Partition::from_parts(repeat(2, n - 1).chain([1, 1]))
        }),
        _ => Err(Error::UnsupportedGroup {
            op: "nonsingular_partition",
            group: group.to_string(),
        }),
    }
}

/// The special expansion of p_ns, the lower bound of the non-singular
/// range. Computed, not tabulated.
pub fn nonsingular_bound(group: GroupType) -> Result<Partition> {
    special_expansion(&nonsingular_partition(group)?, group)
}

/// Parses the inline factor grammar `tau:a=3,orth,b=3 + tau2:a=2,sympl,b=1`.
pub fn parse_factors(s: &str) -> Result<Vec<SimpleFactor>> {
    let err = |reason: String| Error::ParseParameter {
        input: s.to_string(),
        reason,
    };
    let mut factors = Vec::new();
    for piece in s.split('+') {
        let piece = piece.trim();
        let (label, body) = piece
            .split_once(':')
            .ok_or_else(|| err(format!("factor `{piece}` is missing the `label:` prefix")))?;
        let (mut a, mut b, mut symmetry) = (None, None, None);
        for item in body.split(',') {
            let item = item.trim();
            match item {
                "orth" | "orthogonal" => symmetry = Some(TauSymmetry::Orthogonal),
                "sympl" | "symplectic" => symmetry = Some(TauSymmetry::Symplectic),
                _ => {
                    let (key, value) = item
                        .split_once('=')
                        .ok_or_else(|| err(format!("unrecognized item `{item}`")))?;
                    let value: u32 = value
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("bad value in `{item}`")))?;
                    match key.trim() {
                        "a" => a = Some(value),
                        "b" => b = Some(value),
                        other => return Err(err(format!("unknown key `{other}`"))),
                    }
                }
            }
        }
        match (a, b, symmetry) {
            (Some(a), Some(b), Some(symmetry)) => {
                factors.push(SimpleFactor::new(label.trim(), a, symmetry, b))
            }
            _ => return Err(err(format!("factor `{label}` needs a=, b= and a symmetry"))),
        }
    }
    if factors.is_empty() {
        return Err(err("no factors given".to_string()));
    }
    Ok(factors)
}

/// Sanity anchor used by tests: the bound of the generic parameter is the
/// principal partition.
pub fn generic_bound_is_principal(group: GroupType) -> Result<bool> {
    Ok(fourier_bound(&ArthurParameter::generic(group)?)? == principal_partition(group)?)
}
