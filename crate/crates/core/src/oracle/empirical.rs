use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::classes::geometric_class;
use super::decompose::{bruhat_b_bminus, bruhat_bb};
use super::matrix::MatrixFq;
use crate::coxeter::{WeylElement, WeylGroup};
use crate::error::Result;
use crate::perm::Perm;
use crate::sl_criteria::{symmetric_group, JordanClass};

/// Bruhat order on `S_n` through the type A Weyl group.
pub struct PermOrder {
    group: WeylGroup,
    elements: HashMap<Perm, WeylElement>,
    perms: Vec<Perm>,
}

impl PermOrder {
    pub fn new(n: usize) -> Result<Self> {
        let group = symmetric_group(n)?;
        let perms: Vec<Perm> = Perm::all(n).collect();
        let mut elements = HashMap::new();
        for p in &perms {
            elements.insert(p.clone(), group.from_permutation(p)?);
        }
        Ok(PermOrder {
            group,
            elements,
            perms,
        })
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn leq(&self, u: &Perm, w: &Perm) -> bool {
        self.group
            .bruhat_leq(&self.elements[u], &self.elements[w])
            .expect("same group")
    }

    pub fn below(&self, top: &Perm) -> BTreeSet<Perm> {
        self.perms
            .iter()
            .filter(|p| self.leq(p, top))
            .cloned()
            .collect()
    }

    pub fn above(&self, bottom: &Perm) -> BTreeSet<Perm> {
        self.perms
            .iter()
            .filter(|p| self.leq(bottom, p))
            .cloned()
            .collect()
    }

    /// Elements of `set` with nothing in `set` strictly above them.
    pub fn maximal(&self, set: &BTreeSet<Perm>) -> Vec<Perm> {
        set.iter()
            .filter(|u| !set.iter().any(|w| w != *u && self.leq(u, w)))
            .cloned()
            .collect()
    }

    /// The `S_n`-conjugacy class of `w`.
    pub fn conjugates(&self, w: &Perm) -> BTreeSet<Perm> {
        self.perms
            .iter()
            .map(|x| x.compose(w).compose(&x.inverse()))
            .collect()
    }
}

/// Cells of `G = SL(n, F_q)` met by one class.
#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalTable {
    pub class: JordanClass,
    pub q: u32,
    pub class_size: usize,
    /// `w` with `C ∩ BwB` nonempty.
    pub wc: BTreeSet<Perm>,
    /// `w` with `C ∩ BwB^-` nonempty.
    pub wc_minus: BTreeSet<Perm>,
    /// Bruhat-maximal elements of `wc`.
    pub maximal: Vec<Perm>,
    /// The maximum of `wc` when it has one.
    pub bruhat_max: Option<Perm>,
}

/// Decomposes every element of the class of `c` over `F_q`.
pub fn empirical_wc(c: &JordanClass, q: u32, allow_large: bool) -> Result<EmpiricalTable> {
    let orbit = geometric_class(c, q, allow_large)?;
    empirical_from_orbit(c, q, &orbit)
}

pub fn empirical_from_orbit(c: &JordanClass, q: u32, orbit: &[MatrixFq]) -> Result<EmpiricalTable> {
    let mut wc = BTreeSet::new();
    let mut wc_minus = BTreeSet::new();
    for g in orbit {
        wc.insert(bruhat_bb(g)?);
        wc_minus.insert(bruhat_b_bminus(g)?);
    }
    let order = PermOrder::new(c.n_plus_1())?;
    let maximal = order.maximal(&wc);
    let bruhat_max = match maximal.as_slice() {
        [m] => Some(m.clone()),
        _ => None,
    };
    Ok(EmpiricalTable {
        class: c.clone(),
        q,
        class_size: orbit.len(),
        wc,
        wc_minus,
        maximal,
        bruhat_max,
    })
}
