use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Family letter of a simple Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Simple Cartan type such as `A3` or `E6`. Nodes are labelled 1..=rank in
/// the Bourbaki convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: u8,
}

/// Largest rank supported by the fixed-size element storage.
pub const MAX_RANK: usize = 8;

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType {
            family,
            rank: rank as u8,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank() as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank();
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Squared lengths of the simple roots, short roots normalized to 2.
    pub(crate) fn root_norms(&self) -> Vec<i32> {
        let n = self.rank();
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Dynkin diagram edges as 0-based node pairs.
    pub(crate) fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                // 1-3-4-5-6(-7-8), with 2 attached to 4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        }
    }

    /// Symmetric invariant form on simple roots.
    pub(crate) fn gram_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let norms = self.root_norms();
        let mut g = vec![vec![0; n]; n];
        for i in 0..n {
            g[i][i] = norms[i];
        }
        for (i, j) in self.edges() {
            let v = -norms[i].max(norms[j]) / 2;
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
