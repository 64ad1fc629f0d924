//! Integer partitions with conjugation, dominance and e-regularity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Cardinal;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the partition of zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The partition associated to an arbitrary family of non-negative
    /// integers: sort decreasingly and drop zeros.
    pub fn from_family<I: IntoIterator<Item = u64>>(family: I) -> Self {
        let mut parts: Vec<u64> = family.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The one-row partition `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: u64) -> Self {
        Self::from_family([n])
    }

    /// `(1, ..., 1)` with `n` parts.
    pub fn column(n: u64) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u64)
            .collect();
        Partition { parts }
    }

    /// `self ⊴ other`: every prefix sum of `self` is at most the matching
    /// prefix sum of `other`. Both must partition the same integer.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.total(), other.total());
        if a != b {
            return Err(Error::UnequalTotals(a, b));
        }
        let len = self.len().max(other.len());
        let (mut sa, mut sb) = (0u64, 0u64);
        for k in 0..len {
            sa += self.parts.get(k).copied().unwrap_or(0);
            sb += other.parts.get(k).copied().unwrap_or(0);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Componentwise sum, padding the shorter partition with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len)
            .map(|k| self.parts.get(k).unwrap_or(&0) + other.parts.get(k).unwrap_or(&0))
            .collect();
        Partition { parts }
    }

    /// No part value is repeated `e` or more times.
    pub fn is_e_regular(&self, e: Cardinal) -> bool {
        let Some(e) = e.finite() else {
            return true;
        };
        self.parts
            .chunk_by(|a, b| a == b)
            .all(|run| (run.len() as u64) < e)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `(3,1,1)` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPartition(Vec::new()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// The e-regular partitions of `n`, lexicographically descending.
pub fn e_regular_partitions(n: u64, e: Cardinal) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|p| p.is_e_regular(e))
        .collect()
}

/// Number of partitions of `n`.
pub fn partition_count(n: u64) -> u64 {
    // coin-change table over part sizes
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominated_by(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominated_by(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 1, 1]).dominated_by(&p(&[2, 1, 1])).unwrap());
        assert_eq!(
            p(&[2]).dominated_by(&p(&[2, 1])),
            Err(Error::UnequalTotals(2, 3))
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[2, 1]).add(&p(&[1, 1])), p(&[3, 2]));
        assert_eq!(p(&[4, 2]).add(&Partition::empty()), p(&[4, 2]));
        assert_eq!(p(&[1, 1]).add(&p(&[2])), p(&[3, 1]));
    }

    #[test]
    fn regularity_examples() {
        assert!(!p(&[1, 1, 1]).is_e_regular(Cardinal::Finite(3)));
        assert!(p(&[3, 2]).is_e_regular(Cardinal::Finite(2)));
        assert!(!p(&[2, 2, 1]).is_e_regular(Cardinal::Finite(2)));
        assert!(p(&[1, 1, 1, 1]).is_e_regular(Cardinal::Infinite));
    }

    #[test]
    fn regular_enumeration_examples() {
        let five = e_regular_partitions(5, Cardinal::Finite(2));
        assert_eq!(five, vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]);
        assert_eq!(e_regular_partitions(6, Cardinal::Finite(3)).len(), 7);
        assert_eq!(e_regular_partitions(7, Cardinal::Infinite), partitions(7));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn text_form() {
        for s in ["(3,1,1)", "()", "(7)"] {
            let part: Partition = s.parse().unwrap();
            assert_eq!(part.to_string(), s);
        }
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 0..15 {
            assert_eq!(partition_count(n), partitions(n).len() as u64);
        }
        assert_eq!(partition_count(4), 5);
        assert_eq!(partition_count(5), 7);
    }
}
