use std::collections::HashSet;
use std::ops::Deref;

use crate::coxeter::{DiagramAutomorphism, WeylElement, WeylGroup};
use crate::error::Result;

/// A set of Weyl group elements closed under some generator action, kept
/// sorted with the length of every element.
#[derive(Debug, Clone)]
pub struct Orbit {
    representative: WeylElement,
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    max_len: usize,
    min_len: usize,
}

impl Orbit {
    /// Breadth-first closure of `seed` under `step(w, j)` for every node `j`.
    /// Each layer is sorted before expansion.
    pub(crate) fn explore<F>(group: &WeylGroup, seed: WeylElement, step: F) -> Orbit
    where
        F: Fn(&WeylElement, usize) -> WeylElement,
    {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(seed);
        let mut frontier = vec![seed];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for j in 0..group.rank() {
                    let x = step(w, j);
                    if seen.insert(x) {
                        next.push(x);
                    }
                }
            }
            next.sort_unstable();
            frontier = next;
        }
        let mut elements: Vec<WeylElement> = seen.into_iter().collect();
        elements.sort_unstable();
        let lengths: Vec<usize> = elements.iter().map(|w| group.length(w)).collect();
        let max_len = lengths.iter().copied().max().unwrap_or(0);
        let min_len = lengths.iter().copied().min().unwrap_or(0);
        Orbit {
            representative: seed,
            elements,
            lengths,
            max_len,
            min_len,
        }
    }

    pub fn representative(&self) -> &WeylElement {
        &self.representative
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    /// Elements paired with their lengths.
    pub fn iter_with_lengths(&self) -> impl Iterator<Item = (&WeylElement, usize)> {
        self.elements.iter().zip(self.lengths.iter().copied())
    }

    pub fn length_of(&self, w: &WeylElement) -> Option<usize> {
        self.elements.binary_search(w).ok().map(|i| self.lengths[i])
    }

    pub fn max_length(&self) -> usize {
        self.max_len
    }

    pub fn min_length(&self) -> usize {
        self.min_len
    }

    pub fn max_length_elements(&self) -> Vec<WeylElement> {
        self.with_length(self.max_len)
    }

    pub fn min_length_elements(&self) -> Vec<WeylElement> {
        self.with_length(self.min_len)
    }

    fn with_length(&self, l: usize) -> Vec<WeylElement> {
        self.iter_with_lengths()
            .filter(|&(_, len)| len == l)
            .map(|(w, _)| *w)
            .collect()
    }

    pub fn is_unique_max(&self) -> bool {
        self.lengths.iter().filter(|&&l| l == self.max_len).count() == 1
    }

    pub fn is_unique_min(&self) -> bool {
        self.lengths.iter().filter(|&&l| l == self.min_len).count() == 1
    }
}

/// Conjugacy class of an element of W.
#[derive(Debug, Clone)]
pub struct ConjClass {
    orbit: Orbit,
}

impl Deref for ConjClass {
    type Target = Orbit;

    fn deref(&self) -> &Orbit {
        &self.orbit
    }
}

/// `{delta(u) w u^-1 : u in W}` for a diagram automorphism `delta`.
#[derive(Debug, Clone)]
pub struct TwistedConjClass {
    delta: DiagramAutomorphism,
    orbit: Orbit,
}

impl TwistedConjClass {
    pub fn delta(&self) -> &DiagramAutomorphism {
        &self.delta
    }
}

impl Deref for TwistedConjClass {
    type Target = Orbit;

    fn deref(&self) -> &Orbit {
        &self.orbit
    }
}

/// Conjugacy class of `w` by breadth-first search under `w -> s w s`.
pub fn conj_class(group: &WeylGroup, w: &WeylElement) -> Result<ConjClass> {
    group.check_member(w)?;
    group.check_guard("conjugacy class")?;
    Ok(ConjClass {
        orbit: Orbit::explore(group, *w, |x, j| group.conj_gen(j, x)),
    })
}

/// Twisted class of `w` by breadth-first search under `w -> delta(s) w s`.
pub fn twisted_class(
    group: &WeylGroup,
    w: &WeylElement,
    delta: &DiagramAutomorphism,
) -> Result<TwistedConjClass> {
    group.check_member(w)?;
    group.check_guard("twisted conjugacy class")?;
    // revalidate: the automorphism may come from another group of equal rank
    let delta = DiagramAutomorphism::new(group, &delta.labels())?;
    let orbit = Orbit::explore(group, *w, |x, j| {
        group.mul_gen_right(&group.mul_gen_left(delta.image0(j), x), j)
    });
    Ok(TwistedConjClass { delta, orbit })
}

/// Splits W (or, with `involutions_only`, its involutions) into conjugacy
/// classes, ordered by their smallest element.
pub fn all_classes(group: &WeylGroup, involutions_only: bool) -> Result<Vec<ConjClass>> {
    let elements = group.elements()?;
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut out = Vec::new();
    for w in &elements {
        if seen.contains(w) || (involutions_only && !group.is_involution(w)) {
            continue;
        }
        let c = conj_class(group, w)?;
        seen.extend(c.elements().iter().copied());
        out.push(c);
    }
    Ok(out)
}

/// Involution classes reached from the longest elements `w_{0,J}` of all
/// standard parabolic subgroups, without enumerating W.
pub fn involution_classes_from_parabolics(group: &WeylGroup) -> Result<Vec<ConjClass>> {
    group.check_guard("involution classes")?;
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut out: Vec<ConjClass> = Vec::new();
    for j in crate::coxeter::NodeSet::all_subsets(group.rank()) {
        let seed = group.longest_element(j)?;
        if seen.contains(&seed) {
            continue;
        }
        let c = conj_class(group, &seed)?;
        seen.extend(c.elements().iter().copied());
        out.push(c);
    }
    out.sort_by(|a, b| a.elements()[0].cmp(&b.elements()[0]));
    Ok(out)
}
