//! The fundamental partition datatype: a non-increasing list of positive
//! integers, with the dominance and lexicographic orders, Young-diagram
//! transpose, row-wise addition, and the one-box size adjustments used by
//! the duality recipes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on `enumerate_partitions`: p(40) = 37338 partitions.
pub const DEFAULT_ENUMERATION_CAP: u64 = 40;

/// A canonical integer partition: parts sorted non-increasing, no zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from raw entries, dropping zeros and sorting.
    /// Negative entries are rejected.
    pub fn new<I: IntoIterator<Item = i64>>(raw: I) -> Result<Self> {
        let mut parts = Vec::new();
        for x in raw {
            if x < 0 {
                return Err(Error::NegativePart(x));
            }
            if x > 0 {
                parts.push(x as u32);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Builds a partition from known non-negative parts.
    pub fn from_parts<I: IntoIterator<Item = u32>>(raw: I) -> Self {
        let mut parts: Vec<u32> = raw.into_iter().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// The i-th part (0-based), zero-padded past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the Young diagram: `result[j-1]` counts parts >= j.
    pub fn transpose(&self) -> Partition {
        match self.parts.first() {
            None => Partition::empty(),
            Some(&max) => {
                let parts = (1..=max)
                    .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
                    .collect();
                Partition { parts }
            }
        }
    }

    /// Dominance order: `self <= other` iff every prefix sum of `self` is at
    /// most the corresponding prefix sum of `other`. Defined only for equal
    /// sizes.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        check_same_size(self, other)?;
        let n = self.len().max(other.len());
        let (mut sp, mut sq) = (0u64, 0u64);
        for i in 0..n {
            sp += self.part(i) as u64;
            sq += other.part(i) as u64;
            if sp > sq {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lexicographic comparison of part lists, zero-padded. Total order on
    /// partitions of a fixed size.
    pub fn lex_cmp(&self, other: &Partition) -> Result<Ordering> {
        check_same_size(self, other)?;
        let n = self.len().max(other.len());
        for i in 0..n {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                ord => return Ok(ord),
            }
        }
        Ok(Ordering::Equal)
    }

    /// Index-wise sum of parts, zero-padded. The summands are non-increasing,
    /// so the result is too.
    pub fn add_rowwise(ps: &[Partition]) -> Partition {
        let n = ps.iter().map(|p| p.len()).max().unwrap_or(0);
        let parts = (0..n)
            .map(|i| ps.iter().map(|p| p.part(i)).sum::<u32>())
            .collect();
        Partition { parts }
    }

    /// Lowers the last part by one box (dropping it if it reaches zero).
    /// This is the `q -> q^-` size adjustment of the symplectic duality
    /// recipe.
    pub fn decrement_smallest(&self) -> Result<Partition> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            None => Err(Error::EmptyPartition),
            Some(last) => {
                *last -= 1;
                if *last == 0 {
                    parts.pop();
                }
                Ok(Partition { parts })
            }
        }
    }

    /// Raises the first part by one box (the empty partition becomes `[1]`).
    pub fn increment_largest(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            None => parts.push(1),
            Some(first) => *first += 1,
        }
        Partition { parts }
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&x| x == v).count()
    }
}

fn check_same_size(p: &Partition, q: &Partition) -> Result<()> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch {
            expected: p.size(),
            actual: q.size(),
        });
    }
    Ok(())
}

/// All partitions of `n` in descending lexicographic order, starting at `[n]`
/// and ending at `[1^n]`. Errors if `n` exceeds `cap`.
pub fn enumerate_partitions(n: u64, cap: u64) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_desc(n as u32, n as u32, &mut stack, &mut out);
    Ok(out)
}

fn gen_desc(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for first in (1..=n.min(max_part)).rev() {
        prefix.push(first);
        gen_desc(n - first, first, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for Partition {
    /// Canonical text form: comma-separated parts, e.g. `3,3,2`; the empty
    /// partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,3,1` or the exponent sugar `3^2,1` (k copies of x as `x^k`).
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut raw = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (value, count) = match piece.split_once('^') {
                None => (piece, 1u32),
                Some((v, k)) => {
                    let k: u32 = k
                        .trim()
                        .parse()
                        .map_err(|_| err(&format!("bad exponent `{k}`")))?;
                    (v.trim(), k)
                }
            };
            let v: i64 = value
                .parse()
                .map_err(|_| err(&format!("bad part `{value}`")))?;
            for _ in 0..count {
                raw.push(v);
            }
        }
        Partition::new(raw)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Partition::new(raw).map_err(D::Error::custom)
    }
}
