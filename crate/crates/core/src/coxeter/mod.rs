//! Root systems and Weyl group arithmetic for the simple Cartan types.
//!
//! Elements are integer matrices in the simple-root basis, so multiplication
//! is a matrix product and equality is bytewise. Node labels follow
//! Bourbaki and are 1-based throughout the public API.

mod cartan;
mod group;
mod nodes;
mod roots;
mod type_a;

pub use cartan::{CartanType, Family, MAX_RANK};
pub use group::{ParabolicSubset, WeylElement, WeylGroup, ENUMERATION_LIMIT};
pub use nodes::NodeSet;
pub use roots::RootSystem;

use crate::error::{Error, Result};

/// Diagram automorphism given as a permutation of node labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    /// 0-based image of each 0-based node.
    images: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism {
            images: (0..rank).collect(),
        }
    }

    /// `labels[i - 1]` is the image of node `i`; checked against the Cartan
    /// matrix of `group`.
    pub fn new(group: &WeylGroup, labels: &[usize]) -> Result<Self> {
        let n = group.rank();
        if labels.len() != n {
            return Err(Error::NotAutomorphism(format!(
                "expected {n} images, got {}",
                labels.len()
            )));
        }
        let images: Vec<usize> = labels.iter().map(|&l| l.wrapping_sub(1)).collect();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAutomorphism(format!(
                    "{labels:?} is not a permutation"
                )));
            }
        }
        let rs = group.root_system();
        for i in 0..n {
            for j in 0..n {
                if rs.cartan_integer(i, j) != rs.cartan_integer(images[i], images[j]) {
                    return Err(Error::NotAutomorphism(format!(
                        "{labels:?} does not preserve the Cartan matrix"
                    )));
                }
            }
        }
        Ok(DiagramAutomorphism { images })
    }

    /// The automorphism `alpha -> -w0(alpha)`.
    pub fn delta0(group: &WeylGroup) -> Self {
        DiagramAutomorphism {
            images: (0..group.rank()).map(|i| group.delta0_index(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Image of node label `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn apply(&self, group: &WeylGroup, w: &WeylElement) -> WeylElement {
        group.permute_nodes(&self.images, w)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta0_automorphism_matches_w0_conjugation() {
        for s in ["A3", "B3", "D5", "E6", "G2"] {
            let g = WeylGroup::from_type_str(s).unwrap();
            let d = DiagramAutomorphism::delta0(&g);
            assert!(DiagramAutomorphism::new(&g, &d.labels()).is_ok());
            let w = g.from_word(&[1, 2, 1]).unwrap();
            assert_eq!(d.apply(&g, &w), g.delta0_element(&w), "{s}");
        }
    }

    #[test]
    fn automorphism_validation() {
        let g = WeylGroup::from_type_str("B3").unwrap();
        assert!(DiagramAutomorphism::new(&g, &[3, 2, 1]).is_err());
        assert!(DiagramAutomorphism::new(&g, &[1, 1, 3]).is_err());
        let a = WeylGroup::from_type_str("A3").unwrap();
        assert!(DiagramAutomorphism::new(&a, &[3, 2, 1]).is_ok());
        assert!(DiagramAutomorphism::new(&a, &[2, 1, 3]).is_err());
    }
}
