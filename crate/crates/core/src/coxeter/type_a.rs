//! Identification of `W(A_n)` with `S_{n+1}`: `s_i` is the transposition
//! `(i, i+1)` and `alpha_i = e_i - e_{i+1}`.

use super::cartan::Family;
use super::group::{WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::perm::Perm;

impl WeylGroup {
    fn require_type_a(&self) -> Result<()> {
        if self.cartan_type().family() != Family::A {
            return Err(Error::Unsupported(format!(
                "permutation form requires type A, got {}",
                self.cartan_type()
            )));
        }
        Ok(())
    }

    /// Permutation of `{1..n+1}` acting on the `e_i` like `w`.
    pub fn to_permutation(&self, w: &WeylElement) -> Result<Perm> {
        self.require_type_a()?;
        let n = self.rank();
        let mut images = vec![0usize; n + 1];
        for j in 0..n {
            // w(alpha_j) = e_a - e_b is +(alpha_a + ... + alpha_{b-1}) or its negative
            let col = w.column(j);
            let lo = col.iter().position(|&x| x != 0).expect("root is nonzero");
            let hi = col.iter().rposition(|&x| x != 0).expect("root is nonzero");
            let (a, b) = if col[lo] > 0 {
                (lo, hi + 1)
            } else {
                (hi + 1, lo)
            };
            images[j] = a;
            images[j + 1] = b;
        }
        Perm::from_images(images)
    }

    pub fn from_permutation(&self, p: &Perm) -> Result<WeylElement> {
        self.require_type_a()?;
        let n = self.rank();
        if p.degree() != n + 1 {
            return Err(Error::InvalidPermutation(format!(
                "degree {} does not match {}",
                p.degree(),
                self.cartan_type()
            )));
        }
        // bubble sort: peel off right descents
        let mut cur = p.images();
        let mut word = Vec::new();
        loop {
            match (0..n).find(|&i| cur[i] > cur[i + 1]) {
                Some(i) => {
                    cur.swap(i, i + 1);
                    word.push(i + 1);
                }
                None => break,
            }
        }
        word.reverse();
        self.from_word(&word)
    }

    /// Cycle notation for type A, reduced word otherwise.
    pub fn format_element(&self, w: &WeylElement) -> String {
        match self.to_permutation(w) {
            Ok(p) => p.to_string(),
            Err(_) => self.format_word(w),
        }
    }

    /// Inverse of [`format_element`](Self::format_element).
    pub fn parse_element(&self, s: &str) -> Result<WeylElement> {
        if self.cartan_type().family() == Family::A && (s.contains('(') || s.trim() == "()") {
            let p = Perm::parse(s, self.rank() + 1)?;
            return self.from_permutation(&p);
        }
        if s.trim() == "e" {
            return Ok(self.identity());
        }
        self.parse_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_adjacent_transpositions() {
        let g = WeylGroup::from_type_str("A3").unwrap();
        for i in 1..=3 {
            let p = g.to_permutation(&g.simple_reflection(i).unwrap()).unwrap();
            assert_eq!(p, Perm::transposition(4, i, i + 1));
        }
        assert_eq!(
            g.to_permutation(&g.longest()).unwrap().to_string(),
            "(1 4)(2 3)"
        );
    }

    #[test]
    fn round_trip_and_homomorphism() {
        let g = WeylGroup::from_type_str("A4").unwrap();
        let all = g.elements().unwrap();
        for w in all.iter().step_by(7) {
            let p = g.to_permutation(w).unwrap();
            assert_eq!(g.from_permutation(&p).unwrap(), *w);
            assert_eq!(p.inversions(), g.length(w));
            let u = all[(p.inversions() * 13) % all.len()];
            let q = g.to_permutation(&u).unwrap();
            assert_eq!(g.to_permutation(&g.mul(w, &u)).unwrap(), p.compose(&q));
        }
    }

    #[test]
    fn parse_and_format() {
        let g = WeylGroup::from_type_str("A3").unwrap();
        let w = g.parse_element("(1 4)").unwrap();
        assert_eq!(g.format_element(&w), "(1 4)");
        let b = WeylGroup::from_type_str("B2").unwrap();
        let w = b.parse_element("1 2 1").unwrap();
        assert_eq!(b.format_element(&w), "1 2 1");
        assert_eq!(b.format_element(&b.identity()), "e");
        assert!(b.to_permutation(&w).is_err());
    }
}
