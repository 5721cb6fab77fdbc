//! Subsets of simple roots indexing the involutions of maximal length:
//! Properties (1) and (2), `J -> w0 w_{0,J}` and its inverse, and the
//! per-family catalog of the subsets having both properties.

use serde::Serialize;

use crate::coxeter::{CartanType, Family, NodeSet, WeylElement, WeylGroup};
use crate::error::{Error, Result};

/// `J` is `delta0`-stable and `w0` agrees with `w_{0,J}` on `J`.
pub fn property1(group: &WeylGroup, j: NodeSet) -> Result<bool> {
    j.check_rank(group.rank())?;
    if group.delta0_nodes(j) != j {
        return Ok(false);
    }
    let w0 = group.longest();
    let w0j = group.longest_element(j)?;
    Ok(j.indices().all(|i| w0.column(i) == w0j.column(i)))
}

/// No isolated `alpha` in `J` has a neighbour `beta` outside the rest of `J`
/// of the same length that is fixed by `-w0`.
pub fn property2(group: &WeylGroup, j: NodeSet) -> Result<bool> {
    j.check_rank(group.rank())?;
    let rs = group.root_system();
    let n = group.rank();
    let pair = |a: usize, b: usize| rs.simple_pairing(a, b);
    for a in j.indices() {
        let isolated = j.indices().all(|x| x == a || pair(a, x) == 0);
        if !isolated {
            continue;
        }
        let violated = (0..n).filter(|&b| b != a).any(|b| {
            let same_len_adjacent = pair(a, a) == pair(b, b) && pair(b, a) != 0;
            let orthogonal_to_rest = j.indices().all(|x| x == a || pair(b, x) == 0);
            let fixed_by_delta0 = group.delta0_index(b) == b;
            same_len_adjacent && orthogonal_to_rest && fixed_by_delta0
        });
        if violated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All subsets with Property (1).
pub fn enumerate_j_prime(group: &WeylGroup) -> Result<Vec<NodeSet>> {
    let mut out = Vec::new();
    for j in NodeSet::all_subsets(group.rank()) {
        if property1(group, j)? {
            out.push(j);
        }
    }
    Ok(out)
}

/// All subsets with Properties (1) and (2).
pub fn enumerate_j(group: &WeylGroup) -> Result<Vec<NodeSet>> {
    let mut out = Vec::new();
    for j in NodeSet::all_subsets(group.rank()) {
        if property1(group, j)? && property2(group, j)? {
            out.push(j);
        }
    }
    Ok(out)
}

/// `w0 w_{0,J}`.
pub fn m_of_j(group: &WeylGroup, j: NodeSet) -> Result<WeylElement> {
    let w0j = group.longest_element(j)?;
    Ok(group.multiply(&group.longest(), &w0j)?)
}

/// Simple roots fixed by the involution `m`.
pub fn j_of_m(group: &WeylGroup, m: &WeylElement) -> Result<NodeSet> {
    group.check_member(m)?;
    if !group.is_involution(m) {
        return Err(Error::NotInvolution(group.format_element(m)));
    }
    Ok(group.fixed_simple_roots(m))
}

/// Named entry of the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub nodes: NodeSet,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, labels: impl IntoIterator<Item = usize>) -> Self {
        CatalogEntry {
            name: name.into(),
            nodes: NodeSet::from_labels(labels),
        }
    }

    pub fn is_trivial(&self, rank: usize) -> bool {
        self.nodes.is_empty() || self.nodes == NodeSet::full(rank)
    }
}

fn odd_nodes(upto: usize) -> impl Iterator<Item = usize> {
    (1..=upto).step_by(2)
}

/// Catalog of subsets with Properties (1) and (2), stored as per-family
/// rules: the two trivial subsets followed by the non-trivial ones.
pub fn catalog_j(t: CartanType) -> Vec<CatalogEntry> {
    let n = t.rank();
    let mut out = vec![
        CatalogEntry::new("empty", []),
        CatalogEntry::new("full", 1..=n),
    ];
    if n < 2 {
        return out;
    }
    match t.family() {
        Family::A => {
            for l in 1..(n + 1) / 2 {
                out.push(CatalogEntry::new(format!("J_{l}"), l + 1..=n - l));
            }
        }
        Family::B | Family::C => {
            for l in 2..=n {
                out.push(CatalogEntry::new(format!("J_1,{l}"), l..=n));
            }
            for l in (1..).take_while(|l| 2 * l + 2 <= n) {
                out.push(CatalogEntry::new(
                    format!("J_2,{l}"),
                    odd_nodes(2 * l - 1).chain(2 * l + 1..=n),
                ));
            }
            if n % 2 == 0 {
                out.push(CatalogEntry::new("J_3", odd_nodes(n - 1)));
            } else {
                out.push(CatalogEntry::new("J_4", odd_nodes(n)));
            }
        }
        Family::D => {
            let m = n / 2;
            for l in 2..=m {
                out.push(CatalogEntry::new(format!("J_1,{l}"), 2 * l - 1..=n));
            }
            for l in 1..m {
                out.push(CatalogEntry::new(
                    format!("J_2,{l}"),
                    odd_nodes(2 * l - 1).chain(2 * l + 1..=n),
                ));
            }
            if n % 2 == 0 {
                out.push(CatalogEntry::new("J_3", odd_nodes(n - 1)));
                out.push(CatalogEntry::new("J_4", odd_nodes(n - 3).chain([n])));
            } else {
                out.push(CatalogEntry::new("J_3", odd_nodes(n - 2)));
            }
        }
        Family::E => {
            let sets: &[&[usize]] = match n {
                6 => &[&[1, 3, 4, 5, 6], &[3, 4, 5]],
                7 => &[
                    &[2, 3, 4, 5, 6, 7],
                    &[2, 3, 4, 5, 7],
                    &[2, 3, 4, 5],
                    &[2, 5, 7],
                ],
                _ => &[&[1, 2, 3, 4, 5, 6, 7], &[2, 3, 4, 5, 6, 7], &[2, 3, 4, 5]],
            };
            for (k, s) in sets.iter().enumerate() {
                out.push(CatalogEntry::new(format!("J_{}", k + 1), s.iter().copied()));
            }
        }
        Family::F => {
            out.push(CatalogEntry::new("J_1", [1, 2, 3]));
            out.push(CatalogEntry::new("J_2", [2, 3, 4]));
            out.push(CatalogEntry::new("J_3", [2, 3]));
        }
        Family::G => {
            out.push(CatalogEntry::new("J_1", [2]));
            out.push(CatalogEntry::new("J_2", [1]));
        }
    }
    out
}
