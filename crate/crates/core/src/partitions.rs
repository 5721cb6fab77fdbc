//! Integer partitions, conjugation and the dominance order.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive part sizes into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn dual(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order on partitions of the same weight; shorter sequences
    /// are padded with zeros.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch(self.weight(), other.weight()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for k in 0..len {
            a += self.parts.get(k).copied().unwrap_or(0);
            b += other.parts.get(k).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(2^l, 1^(p - 2l))`.
    pub fn two_one_shape(p: usize, l: usize) -> Result<Partition> {
        if p == 0 || 2 * l > p {
            return Err(Error::OutOfRange(format!(
                "need p > 0 and 0 <= l <= p/2, got p = {p}, l = {l}"
            )));
        }
        let mut parts = vec![2; l];
        parts.extend(std::iter::repeat_n(1, p - 2 * l));
        Ok(Partition { parts })
    }

    /// Partitions of `p` in reverse lexicographic order.
    pub fn all_of(p: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(p, p, &mut Vec::new(), &mut out);
        out
    }
}

/// Compares `(2^l, 1^(p-2l))` with `mu` in the dominance order.
pub fn two_one_below(p: usize, l: usize, mu: &Partition) -> Result<bool> {
    if mu.weight() != p {
        return Err(Error::WeightMismatch(p, mu.weight()));
    }
    Partition::two_one_shape(p, l)?.dominance_leq(mu)
}

/// The closed form of [`two_one_below`]: `len(mu) <= p - l`.
pub fn two_one_below_by_length(p: usize, l: usize, mu: &Partition) -> Result<bool> {
    if mu.weight() != p {
        return Err(Error::WeightMismatch(p, mu.weight()));
    }
    if 2 * l > p {
        return Err(Error::OutOfRange(format!(
            "l = {l} exceeds p/2 for p = {p}"
        )));
    }
    Ok(mu.len() <= p - l)
}

/// Cycle lengths of `w`, fixed points included, sorted non-increasingly.
pub fn cycle_type(w: &Perm) -> Partition {
    Partition::from_unsorted(w.cycle_lengths()).expect("cycle lengths are positive")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn duals() {
        assert_eq!(p("3,1").dual(), p("2,1,1"));
        assert_eq!(p("1,1,1,1,1").dual(), p("5"));
        // (2^l, 1^(p-2l))* = (p-l, l)
        assert_eq!(p("2,2,1,1,1").dual(), p("5,2"));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("1,1,1").dominance_leq(&p("2,1")).unwrap());
        assert!(!p("3").dominance_leq(&p("2,1")).unwrap());
        assert!(matches!(
            p("2,1").dominance_leq(&p("2")),
            Err(Error::WeightMismatch(3, 2))
        ));
    }

    #[test]
    fn two_one_shapes() {
        assert_eq!(Partition::two_one_shape(5, 2).unwrap(), p("2,2,1"));
        assert_eq!(Partition::two_one_shape(4, 0).unwrap(), p("1,1,1,1"));
        assert_eq!(Partition::two_one_shape(4, 2).unwrap(), p("2,2"));
        assert!(Partition::two_one_shape(5, 3).is_err());
    }

    #[test]
    fn two_one_below_examples() {
        assert!(two_one_below(5, 2, &p("2,2,1")).unwrap());
        assert!(!two_one_below(5, 2, &p("1,1,1,1,1")).unwrap());
        for mu in Partition::all_of(6) {
            assert!(two_one_below(6, 0, &mu).unwrap());
        }
        assert!(two_one_below(5, 1, &p("4")).is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&Perm::identity(4)), p("1,1,1,1"));
        assert_eq!(cycle_type(&Perm::parse("(1 4)(2 3)", 4).unwrap()), p("2,2"));
        assert_eq!(cycle_type(&Perm::parse("(1 2 3)", 4).unwrap()), p("3,1"));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }
}
