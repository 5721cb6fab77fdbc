//! Permutations of `{1, ..., n}`, the Weyl group of `SL(n)`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Permutation stored 0-based; displayed and parsed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// `images[i]` is the 0-based image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a permutation of 0..{n}",
                    images
                )));
            }
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// One-line notation with 1-based values, e.g. `[4, 3, 2, 1]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::InvalidPermutation(
                "one-line values are 1-based".into(),
            ));
        }
        Self::from_images(values.iter().map(|v| v - 1).collect())
    }

    /// Parses cycle notation `(1 4)(2 3)` or a one-line word `4 3 2 1`.
    /// `()` and `e` denote the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let t = s.trim();
        if t == "e" || t.is_empty() {
            return Ok(Self::identity(degree));
        }
        if t.contains('(') {
            return Self::parse_cycles(t, degree);
        }
        let values = t
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() != degree {
            return Err(Error::InvalidPermutation(format!(
                "one-line word {t:?} has {} entries, expected {degree}",
                values.len()
            )));
        }
        Self::from_one_line(&values)
    }

    fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = s;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {x:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears twice in {s:?}"
                    )));
                }
            }
            for k in 0..points.len() {
                images[points[k] - 1] = points[(k + 1) % points.len()] - 1;
            }
            rest = &body[close + 1..];
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of 0-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    /// `|{i : w(i) > i}|`; the number of 2-cycles when `self` is an involution.
    pub fn l2(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| x as usize > *i)
            .count()
    }

    /// Number of inversions, i.e. the Coxeter length in `S_n`.
    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// Disjoint cycles (1-based), fixed points omitted, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Lengths of all cycles including fixed points, unsorted.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.images[i] as usize;
            }
            out.push(len);
        }
        out
    }

    /// All permutations of degree `n` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n).permutations(n).map(|p| Perm {
            images: p.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Transposition of 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }
}

impl fmt::Display for Perm {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Deserializes from one-line notation (1-based array).
impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Perm::parse("(1 4)(2 3)", 4).unwrap();
        assert_eq!(p.one_line(), vec![4, 3, 2, 1]);
        assert_eq!(p.to_string(), "(1 4)(2 3)");
        assert_eq!(Perm::parse(" ( 1 4 ) (2,3)", 4).unwrap(), p);
        assert_eq!(Perm::parse("4 3 2 1", 4).unwrap(), p);
        assert_eq!(Perm::parse("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse("(1 5)", 4).is_err());
        assert!(Perm::parse("(1 2)(2 3)", 4).is_err());
        assert!(Perm::parse("(1 2", 4).is_err());
        assert!(Perm::parse("1 2 3", 4).is_err());
        assert!(Perm::parse("1 1 2 3", 4).is_err());
    }

    #[test]
    fn l2_counts() {
        assert_eq!(Perm::parse("(1 2)(3 4)", 4).unwrap().l2(), 2);
        assert_eq!(Perm::parse("(1 2 3 4)", 4).unwrap().l2(), 3);
        assert_eq!(Perm::parse("(1 2 3)", 4).unwrap().l2(), 2);
        assert_eq!(Perm::identity(5).l2(), 0);
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::parse("(1 2)", 3).unwrap();
        let b = Perm::parse("(2 3)", 3).unwrap();
        // (1 2)(2 3) sends 3 -> 2 -> 1
        assert_eq!(a.compose(&b).apply(2), 0);
        assert_eq!(
            a.compose(&b).compose(&a.compose(&b).inverse()),
            Perm::identity(3)
        );
    }
}
