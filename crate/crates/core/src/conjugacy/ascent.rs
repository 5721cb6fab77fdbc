//! Ascents (`w' <- w`) and the relation `~` between elements of equal length.

use std::collections::{HashMap, HashSet, VecDeque};

use super::classes::Orbit;
use crate::coxeter::{WeylElement, WeylGroup};
use crate::error::Result;

/// Largest |W| for which `~` is searched over every conjugating element.
pub const SIM_SEARCH_LIMIT: u64 = 10_000;

/// `s_i w s_i` when it is not shorter than `w` (1-based `i`).
pub fn ascent_step(group: &WeylGroup, w: &WeylElement, i: usize) -> Result<Option<WeylElement>> {
    let s = group.simple_reflection(i)?;
    group.check_member(w)?;
    let x = group.mul(&group.mul(&s, w), &s);
    Ok((group.length(&x) >= group.length(w)).then_some(x))
}

/// Whether `target` is reachable from `w` by a chain of ascent steps.
pub fn ascent_reachable(group: &WeylGroup, w: &WeylElement, target: &WeylElement) -> Result<bool> {
    group.check_member(w)?;
    group.check_member(target)?;
    if w == target {
        return Ok(true);
    }
    let lt = group.length(target);
    let mut seen = HashSet::from([*w]);
    let mut queue = VecDeque::from([(*w, group.length(w))]);
    while let Some((x, lx)) = queue.pop_front() {
        for j in 0..group.rank() {
            let y = group.conj_gen(j, &x);
            let ly = group.length(&y);
            // lengths never drop along a chain, so longer elements are dead ends
            if ly < lx || ly > lt || !seen.insert(y) {
                continue;
            }
            if y == *target {
                return Ok(true);
            }
            queue.push_back((y, ly));
        }
    }
    Ok(false)
}

/// Elements of `class` that admit no ascent chain to a maximal-length
/// element of the class. Empty when every element does.
pub fn elements_without_ascent_to_max(group: &WeylGroup, class: &Orbit) -> Vec<WeylElement> {
    // walk backwards from the maximal elements: u precedes v when
    // v = s u s and l(u) <= l(v)
    let mut reached: HashSet<WeylElement> = class.max_length_elements().into_iter().collect();
    let mut queue: VecDeque<(WeylElement, usize)> =
        reached.iter().map(|w| (*w, class.max_length())).collect();
    while let Some((v, lv)) = queue.pop_front() {
        for j in 0..group.rank() {
            let u = group.conj_gen(j, &v);
            if reached.contains(&u) {
                continue;
            }
            let lu = class
                .length_of(&u)
                .expect("class is closed under conjugation");
            if lu <= lv {
                reached.insert(u);
                queue.push_back((u, lu));
            }
        }
    }
    class
        .elements()
        .iter()
        .filter(|w| !reached.contains(w))
        .copied()
        .collect()
}

/// `w ~x w'`: equal lengths, `w' = x w x^-1`, and one of the two length
/// additivity conditions.
pub fn sim_step(
    group: &WeylGroup,
    w: &WeylElement,
    w2: &WeylElement,
    x: &WeylElement,
) -> Result<bool> {
    group.check_member(w)?;
    group.check_member(w2)?;
    group.check_member(x)?;
    let xinv = group.inverse(x);
    Ok(sim_step_with(
        group,
        w,
        group.length(w),
        w2,
        x,
        group.length(x),
        &xinv,
    ))
}

fn sim_step_with(
    group: &WeylGroup,
    w: &WeylElement,
    lw: usize,
    w2: &WeylElement,
    x: &WeylElement,
    lx: usize,
    xinv: &WeylElement,
) -> bool {
    let lw2 = group.length(w2);
    if lw != lw2 {
        return false;
    }
    let xw = group.mul(x, w);
    if group.mul(&xw, xinv) != *w2 {
        return false;
    }
    lw2 == group.length(&xw) + lx || lw2 == lx + group.length(&group.mul(w, xinv))
}

/// Precomputed data for searching `~` over all of W.
pub struct SimSearch<'a> {
    group: &'a WeylGroup,
    elements: Vec<(WeylElement, usize, WeylElement)>,
}

impl<'a> SimSearch<'a> {
    pub fn new(group: &'a WeylGroup) -> Result<Self> {
        group.check_order_at_most(
            "search over all conjugating elements",
            SIM_SEARCH_LIMIT,
            false,
        )?;
        let elements = group
            .elements()?
            .into_iter()
            .map(|x| (x, group.length(&x), group.inverse(&x)))
            .collect();
        Ok(SimSearch { group, elements })
    }

    /// Elements `w'` with `w ~x w'` for some `x`.
    pub fn neighbours(&self, w: &WeylElement) -> Vec<WeylElement> {
        let g = self.group;
        let lw = g.length(w);
        let mut out: Vec<WeylElement> = self
            .elements
            .iter()
            .filter_map(|(x, lx, xinv)| {
                let w2 = g.mul(&g.mul(x, w), xinv);
                sim_step_with(g, w, lw, &w2, x, *lx, xinv).then_some(w2)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn reachable(&self, w: &WeylElement, target: &WeylElement) -> bool {
        let mut seen = HashSet::from([*w]);
        let mut queue = VecDeque::from([*w]);
        while let Some(x) = queue.pop_front() {
            if x == *target {
                return true;
            }
            for y in self.neighbours(&x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Number of `~`-components among `elements` (all of one length).
    pub fn components(&self, elements: &[WeylElement]) -> usize {
        let index: HashMap<WeylElement, usize> =
            elements.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let mut parent: Vec<usize> = (0..elements.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (i, w) in elements.iter().enumerate() {
            for y in self.neighbours(w) {
                if let Some(&k) = index.get(&y) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, k));
                    parent[a] = b;
                }
            }
        }
        (0..elements.len())
            .filter(|&i| find(&mut parent, i) == i)
            .count()
    }
}

/// Whether `w ~ target`; searches all conjugating elements, so only for
/// |W| <= 10^4.
pub fn sim_reachable(group: &WeylGroup, w: &WeylElement, target: &WeylElement) -> Result<bool> {
    group.check_member(w)?;
    group.check_member(target)?;
    Ok(SimSearch::new(group)?.reachable(w, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::conj_class;
    use crate::error::Error;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::from_type_str(s).unwrap()
    }

    #[test]
    fn ascent_from_identity_is_identity() {
        let g = group("B3");
        for i in 1..=3 {
            assert_eq!(
                ascent_step(&g, &g.identity(), i).unwrap(),
                Some(g.identity())
            );
        }
        assert!(ascent_step(&g, &g.identity(), 4).is_err());
    }

    #[test]
    fn s1_to_s2_in_a2() {
        let g = group("A2");
        let s1 = g.simple_reflection(1).unwrap();
        let s2 = g.simple_reflection(2).unwrap();
        // s2 s1 s2 = s1 s2 s1 and s1 (s1 s2 s1) s1 = s2, so two steps are needed
        assert_eq!(ascent_step(&g, &s1, 2).unwrap(), Some(g.longest()));
        assert!(ascent_reachable(&g, &s1, &g.longest()).unwrap());
        assert!(!ascent_reachable(&g, &g.longest(), &s1).unwrap());
        assert!(!ascent_reachable(&g, &s1, &s2).unwrap());
    }

    #[test]
    fn sim_basics() {
        let g = group("A3");
        let w = g.from_word(&[1, 2]).unwrap();
        assert!(sim_step(&g, &w, &w, &g.identity()).unwrap());
        let s1 = g.simple_reflection(1).unwrap();
        assert!(!sim_step(&g, &w, &s1, &g.identity()).unwrap());
        let w2 = g.from_word(&[2, 1]).unwrap();
        assert!(sim_reachable(&g, &w, &w2).unwrap());
        assert!(!sim_reachable(&g, &w, &s1).unwrap());
    }

    #[test]
    fn sim_guard() {
        let g = group("E6");
        let id = g.identity();
        assert!(matches!(
            sim_reachable(&g, &id, &id),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn every_element_ascends_in_a3() {
        let g = group("A3");
        for w in g.elements().unwrap() {
            let c = conj_class(&g, &w).unwrap();
            assert!(elements_without_ascent_to_max(&g, &c).is_empty());
        }
    }
}
