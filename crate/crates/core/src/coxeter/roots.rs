use std::collections::{BTreeSet, VecDeque};

use super::cartan::CartanType;

/// Root system of a simple Cartan type, with every root written in the
/// simple-root basis.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    gram: Vec<Vec<i32>>,
    /// `cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)`.
    cartan: Vec<Vec<i32>>,
    roots: Vec<Vec<i32>>,
    positive: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let gram = cartan_type.gram_matrix();
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for j in 0..n {
                let c: i32 = (0..n).map(|k| v[k] * cartan[k][j]).sum();
                if c == 0 {
                    continue;
                }
                let mut r = v.clone();
                r[j] -= c;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Vec<i32>> = seen
            .iter()
            .filter(|r| r.iter().all(|&x| x >= 0))
            .cloned()
            .collect();
        positive.sort_by_key(|r| (r.iter().sum::<i32>(), std::cmp::Reverse(r.clone())));
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );

        RootSystem {
            cartan_type,
            gram,
            cartan,
            roots,
            positive,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// All roots; the first half are the positive roots ordered by height.
    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive
    }

    /// Simple root `alpha_i` (1-based) as a coordinate vector.
    pub fn simple_root(&self, i: usize) -> Vec<i32> {
        let mut e = vec![0; self.rank()];
        e[i - 1] = 1;
        e
    }

    pub fn is_root(&self, v: &[i32]) -> bool {
        self.roots.iter().any(|r| r.as_slice() == v)
    }

    pub fn is_positive(v: &[i32]) -> bool {
        v.iter().sum::<i32>() > 0
    }

    /// Invariant symmetric form; short roots have squared length 2.
    pub fn pairing(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// Pairing of simple roots, 0-based node indices.
    pub(crate) fn simple_pairing(&self, i: usize, j: usize) -> i32 {
        self.gram[i][j]
    }

    /// `<a_i, a_j^vee>` for 0-based node indices.
    pub fn cartan_integer(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn classical_root_counts() {
        assert_eq!(rs("A2").roots().len(), 6);
        assert_eq!(rs("A2").positive_roots().len(), 3);
        assert_eq!(rs("G2").roots().len(), 12);
        assert_eq!(rs("B3").roots().len(), 18);
        for s in [
            "A1", "A5", "B4", "C3", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let r = rs(s);
            assert_eq!(
                r.positive_roots().len(),
                r.cartan_type().positive_root_count(),
                "{s}"
            );
            assert_eq!(r.roots().len(), 2 * r.positive_roots().len());
        }
    }

    #[test]
    fn every_root_is_signed_positive_root() {
        let r = rs("F4");
        for a in r.roots() {
            let neg: Vec<i32> = a.iter().map(|x| -x).collect();
            assert!(r.positive_roots().contains(a) ^ r.positive_roots().contains(&neg));
        }
    }

    #[test]
    fn root_norms() {
        let r = rs("G2");
        let norms: BTreeSet<i32> = r.roots().iter().map(|a| r.pairing(a, a)).collect();
        assert_eq!(norms.into_iter().collect::<Vec<_>>(), vec![2, 6]);
        let r = rs("B3");
        let norms: BTreeSet<i32> = r.roots().iter().map(|a| r.pairing(a, a)).collect();
        assert_eq!(norms.into_iter().collect::<Vec<_>>(), vec![2, 4]);
    }
}
