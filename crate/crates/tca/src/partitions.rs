//! Partitions and integer weights.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers
//! (trailing zeros are trimmed on construction, so equality and hashing are
//! canonical). A [`Weight`] is a finite integer sequence of a declared
//! length, with no sign or ordering constraints; weights are the inputs to
//! Bott's algorithm.
//!
//! The canonical ordering on partitions is ascending by size, then
//! reverse-lexicographic within a size, so `[3] < [2,1] < [1,1,1]`. All
//! enumeration helpers and the serialized output of the rest of the crate
//! follow this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, validating weak decrease and trimming zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidLiteral(format!(
                "partition parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition ∅.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (non-zero) parts, written ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-indexed), zero beyond ℓ(λ).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose (conjugate) partition: (λ†)_i = #{j : λ_j ≥ i}.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: `self` ⊇ `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// True iff ℓ(λ) ≤ rows and λ_1 ≤ cols.
    pub fn fits_rectangle(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// The parts padded with zeros to `len` entries, as a weight.
    ///
    /// Panics if `len < ℓ(λ)`.
    pub fn padded(&self, len: usize) -> Weight {
        assert!(len >= self.len(), "padding length below ℓ(λ)");
        let mut entries: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        entries.resize(len, 0);
        Weight { entries }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Renders in the literal syntax `[3,1,1]`; ∅ is `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// Canonical order: ascending size, then reverse-lexicographic within a
/// size (larger leading parts first).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| {
            let n = self.len().max(other.len());
            for i in 0..n {
                match other.part(i).cmp(&self.part(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_bracketed(s)?;
        let parts = entries
            .iter()
            .map(|&e| {
                usize::try_from(e).map_err(|_| {
                    Error::InvalidLiteral(format!(
                        "partition part '{}' in '{}' must be nonnegative",
                        e, s
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(de)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A finite integer sequence of declared length; entries may have any sign
/// and need not be sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Declared length d.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// Reads a weakly decreasing nonnegative weight back as a partition.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_weakly_decreasing() || self.entries.iter().any(|&e| e < 0) {
            return Err(Error::Internal(format!(
                "weight {:?} is not a partition",
                self.entries
            )));
        }
        Partition::new(self.entries.iter().map(|&e| e as usize).collect())
    }

    /// The dual weight (−v_d, …, −v_1), implementing S_λ(Q*) ≅ S_μ(Q).
    pub fn dual(&self) -> Weight {
        Weight {
            entries: self.entries.iter().rev().map(|&e| -e).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Weight::new(parse_bracketed(s)?))
    }
}

/// Formal concatenation (v_1, …, v_d, μ_1, μ_2, …) with an eventually-zero
/// tail; the returned weight is the finite window of length d + ℓ(μ).
pub fn concat_weight(head: &Weight, mu: &Partition) -> Weight {
    let mut entries = head.entries.clone();
    entries.extend(mu.parts().iter().map(|&p| p as i64));
    Weight { entries }
}

fn parse_bracketed(s: &str) -> Result<Vec<i64>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| {
            Error::InvalidLiteral(format!("'{}' is not a bracketed list like [3,1,1]", s))
        })?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>().map_err(|_| {
                Error::InvalidLiteral(format!("invalid integer token '{}' in '{}'", tok, s))
            })
        })
        .collect()
}

/// All partitions of exactly `n`, canonically ordered.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// All partitions of exactly `n` with parts ≤ `max_part` and at most
/// `max_rows` rows, canonically ordered.
pub fn partitions_bounded(n: usize, max_part: usize, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_bounded(n, max_part.min(n), max_rows, &mut stack, &mut out);
    out.sort();
    out
}

fn gen_bounded(
    n: usize,
    max_part: usize,
    rows_left: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if n == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if rows_left == 0 || max_part == 0 {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        stack.push(p);
        gen_bounded(n - p, p, rows_left - 1, stack, out);
        stack.pop();
    }
}

/// All partitions with |λ| ≤ `max_size` and ℓ(λ) ≤ `max_rows`, canonically
/// ordered.
pub fn partitions_max_size(max_size: usize, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        out.extend(partitions_bounded(n, n, max_rows));
    }
    out
}

/// All partitions contained in the `rows × cols` rectangle, canonically
/// ordered. There are binomial(rows + cols, rows) of them.
pub fn partitions_in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=rows * cols {
        out.extend(partitions_bounded(n, cols, rows));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
    }

    // Independent oracle: (λ†)_i by directly counting boxes in column i.
    fn transpose_by_column_count(q: &Partition) -> Partition {
        let mut cols = Vec::new();
        let mut i = 1;
        loop {
            let c = q.parts().iter().filter(|&&x| x >= i).count();
            if c == 0 {
                break;
            }
            cols.push(c);
            i += 1;
        }
        Partition::new(cols).unwrap()
    }

    #[test]
    fn transpose_involution_exhaustive() {
        for n in 0..=12 {
            for q in partitions_of(n) {
                let t = q.transpose();
                assert_eq!(t, transpose_by_column_count(&q));
                assert_eq!(t.size(), q.size());
                assert_eq!(t.transpose(), q);
            }
        }
    }

    #[test]
    fn concat_weight_examples() {
        let w = concat_weight(&Weight::new(vec![2, 1]), &p(&[1]));
        assert_eq!(w.entries(), &[2, 1, 1]);
        let w = concat_weight(&Weight::new(vec![]), &p(&[3, 2]));
        assert_eq!(w.entries(), &[3, 2]);
        let w = concat_weight(&Weight::new(vec![0]), &p(&[2]));
        assert_eq!(w.entries(), &[0, 2]);
    }

    #[test]
    fn fits_rectangle_examples() {
        assert!(Partition::empty().fits_rectangle(0, 0));
        assert!(Partition::empty().fits_rectangle(4, 7));
        assert!(!p(&[2, 1]).fits_rectangle(1, 3));
        assert!(p(&[3, 3, 1]).fits_rectangle(3, 3));
    }

    #[test]
    fn rectangle_enumeration_cardinality() {
        for r in 0..=6usize {
            for c in 0..=6usize {
                let count = partitions_in_rectangle(r, c).len();
                let expect = num_integer::binomial((r + c) as u64, r as u64) as usize;
                assert_eq!(count, expect, "rectangle {}x{}", r, c);
            }
        }
    }

    #[test]
    fn canonical_order() {
        let d3 = partitions_of(3);
        assert_eq!(d3, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(p(&[2]) < p(&[3]));
        assert!(p(&[3]) < p(&[2, 1]));
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "[3,1,1]".parse().unwrap();
        assert_eq!(q, p(&[3, 1, 1]));
        assert_eq!(q.to_string(), "[3,1,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        let err = "[3,x]".parse::<Partition>().unwrap_err();
        assert!(err.to_string().contains("'x'"), "{}", err);
        let w: Weight = "[0,-2,5]".parse().unwrap();
        assert_eq!(w.entries(), &[0, -2, 5]);
    }

    #[test]
    fn dual_weight_reverses_and_negates() {
        assert_eq!(Weight::new(vec![2, 0, -1]).dual().entries(), &[1, 0, -2]);
    }
}
