use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Subset of the simple roots of a rank <= 16 diagram, stored as a bit mask.
/// The public API speaks 1-based node labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(u16);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(rank: usize) -> Self {
        NodeSet(((1u32 << rank) - 1) as u16)
    }

    pub fn from_bits(bits: u16) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// Builds a set from 1-based labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut bits = 0u16;
        for l in labels {
            debug_assert!((1..=16).contains(&l));
            bits |= 1 << (l - 1);
        }
        NodeSet(bits)
    }

    pub fn contains(self, label: usize) -> bool {
        label >= 1 && label <= 16 && self.0 & (1 << (label - 1)) != 0
    }

    pub(crate) fn contains0(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, label: usize) {
        self.0 |= 1 << (label - 1);
    }

    pub fn remove(&mut self, label: usize) {
        self.0 &= !(1 << (label - 1));
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> impl Iterator<Item = usize> {
        (0..16)
            .filter(move |i| self.0 & (1 << i) != 0)
            .map(|i| i + 1)
    }

    pub(crate) fn indices(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Every subset of a rank-`rank` diagram, in increasing bit order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..(1u32 << rank)).map(|b| NodeSet(b as u16))
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if (self.0 as u32) >> rank != 0 {
            let bad = self.labels().find(|&l| l > rank).unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        Ok(())
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for NodeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = NodeSet::EMPTY;
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let l: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad node label {tok:?}")))?;
            if !(1..=16).contains(&l) {
                return Err(Error::Parse(format!("node label {l} out of range")));
            }
            set.insert(l);
        }
        Ok(set)
    }
}

impl Serialize for NodeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = labels.iter().find(|l| !(1..=16).contains(*l)) {
            return Err(serde::de::Error::custom(format!(
                "node label {bad} out of range"
            )));
        }
        Ok(NodeSet::from_labels(labels))
    }
}
