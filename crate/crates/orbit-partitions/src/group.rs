//! Classical group-type tags, the parity constraints that carve out
//! G-partitions, specialness predicates, and principal partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Parity constraint on a classical partition family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Odd parts must have even multiplicity (Sp and its metaplectic cover).
    Symplectic,
    /// Even parts must have even multiplicity (SO, both parities of rank).
    Orthogonal,
}

impl Parity {
    pub fn admits(self, p: &Partition) -> bool {
        let wrong = match self {
            Parity::Symplectic => 1,
            Parity::Orthogonal => 0,
        };
        let mut i = 0;
        let parts = p.parts();
        while i < parts.len() {
            let v = parts[i];
            let mut m = 0;
            while i < parts.len() && parts[i] == v {
                m += 1;
                i += 1;
            }
            if v % 2 == wrong && m % 2 == 1 {
                return false;
            }
        }
        true
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Symplectic => "symplectic",
            Parity::Orthogonal => "orthogonal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    SoOdd,
    Sp,
    SoEven,
    MetaplecticSp,
    TypeA,
}

/// A classical type tag together with its rank parameter.
///
/// The CLI/JSON tag carries the partition size, not the rank: `Sp:8` means
/// partitions of 8 (so n = 4), `SOodd:7` means partitions of 7, `A:3` means
/// partitions of 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupType {
    kind: GroupKind,
    /// Rank parameter n, or N for type A.
    n: u32,
}

impl GroupType {
    pub fn new(kind: GroupKind, n: u32) -> Self {
        GroupType { kind, n }
    }

    pub fn so_odd(n: u32) -> Self {
        Self::new(GroupKind::SoOdd, n)
    }
    pub fn sp(n: u32) -> Self {
        Self::new(GroupKind::Sp, n)
    }
    pub fn so_even(n: u32) -> Self {
        Self::new(GroupKind::SoEven, n)
    }
    pub fn metaplectic(n: u32) -> Self {
        Self::new(GroupKind::MetaplecticSp, n)
    }
    pub fn type_a(n: u32) -> Self {
        Self::new(GroupKind::TypeA, n)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn rank_param(&self) -> u32 {
        self.n
    }

    /// Size of the G-partitions attached to this group.
    pub fn partition_size(&self) -> u64 {
        let n = self.n as u64;
        match self.kind {
            GroupKind::SoOdd => 2 * n + 1,
            GroupKind::Sp | GroupKind::SoEven | GroupKind::MetaplecticSp => 2 * n,
            GroupKind::TypeA => n,
        }
    }

    /// Size of the partitions on the dual side of the Barbasch-Vogan map.
    /// The metaplectic cover has no duality recipe.
    pub fn dual_partition_size(&self) -> Result<u64> {
        let n = self.n as u64;
        match self.kind {
            GroupKind::Sp => Ok(2 * n + 1),
            GroupKind::SoOdd | GroupKind::SoEven => Ok(2 * n),
            GroupKind::TypeA => Ok(n),
            GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
                op: "dual_partition_size",
                group: self.to_string(),
            }),
        }
    }

    /// Parity constraint of this group's own partitions (none for type A).
    pub fn parity(&self) -> Option<Parity> {
        match self.kind {
            GroupKind::Sp | GroupKind::MetaplecticSp => Some(Parity::Symplectic),
            GroupKind::SoOdd | GroupKind::SoEven => Some(Parity::Orthogonal),
            GroupKind::TypeA => None,
        }
    }

    /// Parity constraint on the dual side of the duality map.
    pub fn dual_parity(&self) -> Result<Option<Parity>> {
        match self.kind {
            GroupKind::Sp | GroupKind::SoEven => Ok(Some(Parity::Orthogonal)),
            GroupKind::SoOdd => Ok(Some(Parity::Symplectic)),
            GroupKind::TypeA => Ok(None),
            GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
                op: "dual_parity",
                group: self.to_string(),
            }),
        }
    }

    /// Parity that the transpose of a special G-partition must satisfy.
    /// Specialness for G is "valid, and transpose satisfies this parity".
    pub(crate) fn special_transpose_parity(&self) -> Result<Parity> {
        match self.kind {
            GroupKind::Sp | GroupKind::SoEven => Ok(Parity::Symplectic),
            GroupKind::SoOdd => Ok(Parity::Orthogonal),
            GroupKind::TypeA | GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
                op: "special_transpose_parity",
                group: self.to_string(),
            }),
        }
    }

    fn check_size(&self, p: &Partition) -> Result<()> {
        if p.size() != self.partition_size() {
            return Err(Error::SizeMismatch {
                expected: self.partition_size(),
                actual: p.size(),
            });
        }
        Ok(())
    }
}

/// Is `p` a G-partition: symplectic groups need odd parts with even
/// multiplicity, orthogonal groups need even parts with even multiplicity,
/// type A is unconstrained. The size must match the group.
pub fn is_valid(p: &Partition, group: GroupType) -> Result<bool> {
    group.check_size(p)?;
    Ok(match group.parity() {
        None => true,
        Some(parity) => parity.admits(p),
    })
}

fn check_valid(p: &Partition, group: GroupType) -> Result<()> {
    if !is_valid(p, group)? {
        return Err(Error::Parity {
            partition: p.to_string(),
            constraint: group.parity().map(Parity::name).unwrap_or("unconstrained"),
            context: format!("a {group} partition"),
        });
    }
    Ok(())
}

/// Is the valid G-partition `p` special? Type A partitions are all special;
/// for Sp and SO_even the transpose must be a symplectic partition, for
/// SO_odd an orthogonal one. This criterion is pinned by the requirement
/// that the specials be exactly the image of the same-type duality map
/// (checked exhaustively by the oracle suite).
pub fn is_special(p: &Partition, group: GroupType) -> Result<bool> {
    check_valid(p, group)?;
    match group.kind() {
        GroupKind::TypeA => Ok(true),
        GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
            op: "is_special",
            group: group.to_string(),
        }),
        _ => Ok(group.special_transpose_parity()?.admits(&p.transpose())),
    }
}

/// Metaplectic-special: among symplectic partitions of 2n, those whose
/// number of even parts strictly bigger than every odd part is odd.
pub fn is_metaplectic_special(p: &Partition) -> Result<bool> {
    // odd sizes fail the size check against the rounded-down rank
    let group = GroupType::metaplectic((p.size() / 2) as u32);
    check_valid(p, group)?;
    let largest_odd = p.parts().iter().copied().find(|v| v % 2 == 1).unwrap_or(0);
    let count = p
        .parts()
        .iter()
        .filter(|&&v| v % 2 == 0 && v > largest_odd)
        .count();
    Ok(count % 2 == 1)
}

/// The partition of the regular nilpotent orbit: `[2n]` for Sp, `[2n+1]`
/// for SO_odd, `[2n-1,1]` for SO_even, `[N]` for type A.
pub fn principal_partition(group: GroupType) -> Result<Partition> {
    let size = group.partition_size() as u32;
    match group.kind() {
        GroupKind::Sp | GroupKind::SoOdd | GroupKind::TypeA => {
            Ok(Partition::from_parts([size]))
        }
        GroupKind::SoEven => {
            if size == 0 {
                Ok(Partition::empty())
            } else {
                Ok(Partition::from_parts([size - 1, 1]))
            }
        }
        GroupKind::MetaplecticSp => Err(Error::UnsupportedGroup {
            op: "principal_partition",
            group: group.to_string(),
        }),
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            GroupKind::Sp => "Sp",
            GroupKind::SoOdd => "SOodd",
            GroupKind::SoEven => "SOeven",
            GroupKind::MetaplecticSp => "Mp",
            GroupKind::TypeA => "A",
        };
        write!(f, "{tag}:{}", self.partition_size())
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGroupTag(s.to_string());
        let (tag, size) = s.split_once(':').ok_or_else(bad)?;
        let size: u64 = size.trim().parse().map_err(|_| bad())?;
        let even_rank = || -> Result<u32> {
            if size % 2 != 0 {
                return Err(bad());
            }
            Ok((size / 2) as u32)
        };
        match tag.trim() {
            "Sp" => Ok(GroupType::sp(even_rank()?)),
            "SOeven" => Ok(GroupType::so_even(even_rank()?)),
            "Mp" => Ok(GroupType::metaplectic(even_rank()?)),
            "SOodd" => {
                if size % 2 != 1 {
                    return Err(bad());
                }
                Ok(GroupType::so_odd(((size - 1) / 2) as u32))
            }
            "A" => Ok(GroupType::type_a(size as u32)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for GroupType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(GroupType::so_odd(2).partition_size(), 5);
        assert_eq!(GroupType::sp(3).partition_size(), 6);
        assert_eq!(GroupType::so_even(3).partition_size(), 6);
        assert_eq!(GroupType::metaplectic(2).partition_size(), 4);
        assert_eq!(GroupType::type_a(3).partition_size(), 3);
        assert_eq!(GroupType::sp(4).dual_partition_size().unwrap(), 9);
        assert_eq!(GroupType::so_odd(2).dual_partition_size().unwrap(), 4);
        assert!(GroupType::metaplectic(2).dual_partition_size().is_err());
    }

    #[test]
    fn validity_examples() {
        assert!(!is_valid(&p("3,1"), GroupType::sp(2)).unwrap());
        assert!(is_valid(&p("2,2,1"), GroupType::so_odd(2)).unwrap());
        assert!(is_valid(&p("3,3,2,2,1,1"), GroupType::sp(6)).unwrap());
        assert!(matches!(
            is_valid(&p("3,1"), GroupType::sp(3)),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(is_valid(&p("2,1"), GroupType::type_a(3)).unwrap());
    }

    #[test]
    fn specialness_examples() {
        assert!(!is_special(&p("2,1,1"), GroupType::sp(2)).unwrap());
        assert!(is_special(&p("3,3,2"), GroupType::sp(4)).unwrap());
        assert!(!is_special(&p("2,2,2,2,1"), GroupType::so_odd(4)).unwrap());
        // invalid inputs are rejected, not classified
        assert!(is_special(&p("3,1"), GroupType::sp(2)).is_err());
    }

    #[test]
    fn metaplectic_special_examples() {
        assert!(is_metaplectic_special(&p("2,1,1")).unwrap());
        assert!(!is_metaplectic_special(&p("2,2")).unwrap());
        assert!(!is_metaplectic_special(&p("4,2,1,1")).unwrap());
        assert!(is_metaplectic_special(&p("3,1")).is_err());
    }

    #[test]
    fn principal_examples() {
        assert_eq!(principal_partition(GroupType::sp(4)).unwrap(), p("8"));
        assert_eq!(principal_partition(GroupType::so_odd(3)).unwrap(), p("7"));
        assert_eq!(principal_partition(GroupType::so_even(3)).unwrap(), p("5,1"));
        assert_eq!(principal_partition(GroupType::type_a(5)).unwrap(), p("5"));
        assert!(principal_partition(GroupType::metaplectic(2)).is_err());
    }

    #[test]
    fn group_tag_roundtrip() {
        for tag in ["Sp:8", "SOodd:7", "SOeven:6", "Mp:4", "A:3"] {
            let g: GroupType = tag.parse().unwrap();
            assert_eq!(g.to_string(), tag);
        }
        assert!("Sp:7".parse::<GroupType>().is_err());
        assert!("SOodd:6".parse::<GroupType>().is_err());
        assert!("X:4".parse::<GroupType>().is_err());
        assert!("Sp".parse::<GroupType>().is_err());
    }
}
