use serde::Serialize;

use super::classes::{all_classes, involution_classes_from_parabolics, ConjClass};
use crate::coxeter::{CartanType, NodeSet, WeylElement, WeylGroup};
use crate::error::Result;

/// How involution classes are found when computing the maximal sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Search {
    /// Enumerate W, keep its involutions and split them into classes.
    Involutions,
    /// Split all of W into classes; does not presuppose that members are
    /// involutions.
    Exhaustive,
    /// Grow involution classes from the longest elements of parabolic
    /// subgroups; never materializes W.
    ParabolicSeeds,
}

impl Search {
    /// `Involutions` when W can be enumerated, `ParabolicSeeds` otherwise.
    pub fn auto(group: &WeylGroup) -> Search {
        if group.order() <= crate::coxeter::ENUMERATION_LIMIT {
            Search::Involutions
        } else {
            Search::ParabolicSeeds
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalMember {
    #[serde(skip)]
    pub element: WeylElement,
    pub formatted: String,
    pub length: usize,
    pub class_size: usize,
    /// Simple roots fixed by the element.
    pub fixed: NodeSet,
}

/// The set of involutions that are of maximal length in their class
/// (`unique_only = false`), or of unique maximal length (`unique_only = true`).
#[derive(Debug, Clone, Serialize)]
pub struct MaximalSet {
    pub cartan_type: CartanType,
    pub unique_only: bool,
    pub members: Vec<MaximalMember>,
}

impl MaximalSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn elements(&self) -> Vec<WeylElement> {
        let mut v: Vec<_> = self.members.iter().map(|m| m.element).collect();
        v.sort_unstable();
        v
    }

    pub fn fixed_sets(&self) -> Vec<NodeSet> {
        let mut v: Vec<_> = self.members.iter().map(|m| m.fixed).collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.members.iter().any(|m| m.element == *w)
    }
}

fn classes_for(group: &WeylGroup, search: Search) -> Result<Vec<ConjClass>> {
    match search {
        Search::Involutions => all_classes(group, true),
        Search::Exhaustive => all_classes(group, false),
        Search::ParabolicSeeds => involution_classes_from_parabolics(group),
    }
}

fn build(group: &WeylGroup, classes: &[ConjClass], unique_only: bool) -> MaximalSet {
    let mut members = Vec::new();
    for c in classes {
        if unique_only && !c.is_unique_max() {
            continue;
        }
        for m in c.max_length_elements() {
            if !unique_only && !group.is_involution(&m) {
                continue;
            }
            members.push(MaximalMember {
                element: m,
                formatted: group.format_element(&m),
                length: c.max_length(),
                class_size: c.len(),
                fixed: group.fixed_simple_roots(&m),
            });
        }
    }
    members.sort_by(|a, b| (a.fixed, a.element).cmp(&(b.fixed, b.element)));
    MaximalSet {
        cartan_type: group.cartan_type(),
        unique_only,
        members,
    }
}

/// Elements that are the unique maximal-length element of their class.
pub fn compute_m(group: &WeylGroup, search: Search) -> Result<MaximalSet> {
    let classes = classes_for(group, search)?;
    Ok(build(group, &classes, true))
}

/// Involutions of maximal (not necessarily unique) length in their class.
pub fn compute_m_prime(group: &WeylGroup, search: Search) -> Result<MaximalSet> {
    let classes = match search {
        // only classes of involutions can contribute
        Search::Exhaustive => all_classes(group, false)?
            .into_iter()
            .filter(|c| group.is_involution(c.representative()))
            .collect(),
        _ => classes_for(group, search)?,
    };
    Ok(build(group, &classes, false))
}

/// Both sets from a single pass over the involution classes.
pub fn compute_m_and_m_prime(
    group: &WeylGroup,
    search: Search,
) -> Result<(MaximalSet, MaximalSet)> {
    let classes = classes_for(group, search)?;
    let involution_classes: Vec<ConjClass> = classes
        .iter()
        .filter(|c| group.is_involution(c.representative()))
        .cloned()
        .collect();
    Ok((
        build(group, &classes, true),
        build(group, &involution_classes, false),
    ))
}
