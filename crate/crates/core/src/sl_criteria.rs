//! Jordan data of conjugacy classes in `SL(n+1)` and the decision
//! procedures for which Bruhat cells such a class meets.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CartanType, Family, WeylGroup};
use crate::error::{Error, Result};
use crate::partitions::{cycle_type, Partition};
use crate::perm::Perm;

/// Eigenvalue label with the sizes of its Jordan blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenData {
    pub label: String,
    pub blocks: Vec<usize>,
}

#[derive(Deserialize)]
struct RawJordanClass {
    n_plus_1: usize,
    eigen_data: Vec<EigenData>,
    #[serde(default)]
    values: Option<BTreeMap<String, i64>>,
}

/// Conjugacy class of `SL(n+1)` over an algebraically closed field, given
/// by Jordan data. Eigenvalues are opaque labels unless `values` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawJordanClass")]
pub struct JordanClass {
    n_plus_1: usize,
    eigen_data: Vec<EigenData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<BTreeMap<String, i64>>,
}

impl TryFrom<RawJordanClass> for JordanClass {
    type Error = Error;

    fn try_from(r: RawJordanClass) -> Result<Self> {
        let mut c = JordanClass::new(r.n_plus_1, r.eigen_data)?;
        if let Some(v) = r.values {
            c = c.with_values(v)?;
        }
        Ok(c)
    }
}

impl JordanClass {
    /// Blocks of each label are sorted non-increasingly.
    pub fn new(n_plus_1: usize, mut eigen_data: Vec<EigenData>) -> Result<Self> {
        let bad = |s: String| Err(Error::InvalidJordanClass(s));
        if n_plus_1 < 2 {
            return bad(format!("n+1 = {n_plus_1}, need at least 2"));
        }
        if eigen_data.is_empty() {
            return bad("no eigenvalues".into());
        }
        for e in eigen_data.iter_mut() {
            if e.blocks.is_empty() || e.blocks.contains(&0) {
                return bad(format!("label {:?} needs positive block sizes", e.label));
            }
            e.blocks.sort_unstable_by(|a, b| b.cmp(a));
        }
        for i in 0..eigen_data.len() {
            if eigen_data[..i]
                .iter()
                .any(|e| e.label == eigen_data[i].label)
            {
                return bad(format!("label {:?} repeated", eigen_data[i].label));
            }
        }
        let total: usize = eigen_data.iter().flat_map(|e| &e.blocks).sum();
        if total != n_plus_1 {
            return bad(format!("blocks sum to {total}, expected {n_plus_1}"));
        }
        Ok(JordanClass {
            n_plus_1,
            eigen_data,
            values: None,
        })
    }

    /// Convenience constructor from bare block lists, labelled `c1, c2, ...`.
    pub fn from_blocks(blocks: &[&[usize]]) -> Result<Self> {
        let eigen_data: Vec<EigenData> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| EigenData {
                label: format!("c{}", i + 1),
                blocks: b.to_vec(),
            })
            .collect();
        let n = eigen_data.iter().flat_map(|e| &e.blocks).sum();
        Self::new(n, eigen_data)
    }

    /// Attaches integer eigenvalues; they must be pairwise distinct and
    /// cover every label.
    pub fn with_values(mut self, values: BTreeMap<String, i64>) -> Result<Self> {
        for e in &self.eigen_data {
            if !values.contains_key(&e.label) {
                return Err(Error::InvalidJordanClass(format!(
                    "no value for label {:?}",
                    e.label
                )));
            }
        }
        if values.len() != self.eigen_data.len() {
            return Err(Error::InvalidJordanClass(
                "values name unknown labels".into(),
            ));
        }
        let mut v: Vec<i64> = values.values().copied().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidJordanClass(
                "eigenvalues must be distinct".into(),
            ));
        }
        self.values = Some(values);
        Ok(self)
    }

    pub fn n_plus_1(&self) -> usize {
        self.n_plus_1
    }

    pub fn eigen_data(&self) -> &[EigenData] {
        &self.eigen_data
    }

    pub fn values(&self) -> Option<&BTreeMap<String, i64>> {
        self.values.as_ref()
    }

    /// Value of each label reduced into `F_p`, in `eigen_data` order. Fails
    /// when values are missing, collide mod `p`, vanish, or the determinant
    /// is not 1.
    pub fn values_mod(&self, p: u32) -> Result<Vec<u32>> {
        let err = |reason: String| Error::FieldData { p, reason };
        let values = self
            .values
            .as_ref()
            .ok_or_else(|| err("no eigenvalues given".into()))?;
        let p64 = p as i64;
        let reduced: Vec<u32> = self
            .eigen_data
            .iter()
            .map(|e| values[&e.label].rem_euclid(p64) as u32)
            .collect();
        if reduced.contains(&0) {
            return Err(err("eigenvalue 0".into()));
        }
        let mut sorted = reduced.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(err("eigenvalues coincide".into()));
        }
        let mut det = 1u64;
        for (e, &v) in self.eigen_data.iter().zip(&reduced) {
            let mult: usize = e.blocks.iter().sum();
            for _ in 0..mult {
                det = det * v as u64 % p as u64;
            }
        }
        if det != 1 {
            return Err(err(format!("determinant {det}, expected 1")));
        }
        Ok(reduced)
    }

    /// Number of Jordan blocks of the label with the most blocks.
    pub fn max_block_count(&self) -> usize {
        self.eigen_data
            .iter()
            .map(|e| e.blocks.len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_central(&self) -> bool {
        self.eigen_data.len() == 1 && self.eigen_data[0].blocks.iter().all(|&b| b == 1)
    }

    pub fn is_semisimple(&self) -> bool {
        self.eigen_data
            .iter()
            .all(|e| e.blocks.iter().all(|&b| b == 1))
    }

    /// Every multiset of labelled block data with `n+1` points, labels
    /// `c1, c2, ...`. Two classes differing by a relabelling appear once.
    pub fn all_abstract(n_plus_1: usize) -> Vec<JordanClass> {
        let pool: Vec<Partition> = (1..=n_plus_1).flat_map(Partition::all_of).collect();
        let mut out = Vec::new();
        fn rec(
            pool: &[Partition],
            start: usize,
            rest: usize,
            cur: &mut Vec<usize>,
            n: usize,
            out: &mut Vec<JordanClass>,
        ) {
            if rest == 0 {
                let blocks: Vec<&[usize]> = cur.iter().map(|&i| pool[i].parts()).collect();
                out.push(JordanClass::from_blocks(&blocks).expect("valid by construction"));
                debug_assert_eq!(out.last().unwrap().n_plus_1, n);
                return;
            }
            for i in start..pool.len() {
                if pool[i].weight() <= rest {
                    cur.push(i);
                    rec(pool, i, rest - pool[i].weight(), cur, n, out);
                    cur.pop();
                }
            }
        }
        rec(&pool, 0, n_plus_1, &mut Vec::new(), n_plus_1, &mut out);
        out
    }
}

impl fmt::Display for JordanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL({})[", self.n_plus_1)?;
        for (i, e) in self.eigen_data.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let blocks: Vec<String> = e.blocks.iter().map(|b| b.to_string()).collect();
            match self.values.as_ref().map(|v| v[&e.label]) {
                Some(v) => write!(f, "{}={v}:{}", e.label, blocks.join(","))?,
                None => write!(f, "{}:{}", e.label, blocks.join(","))?,
            }
        }
        write!(f, "]")
    }
}

/// Involution in `S_{n+1}` together with its number of 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvolutionPerm {
    perm: Perm,
    l2: usize,
}

impl InvolutionPerm {
    pub fn new(perm: Perm) -> Result<Self> {
        if !perm.is_involution() {
            return Err(Error::NotInvolution(perm.to_string()));
        }
        let l2 = perm.l2();
        Ok(InvolutionPerm { perm, l2 })
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn l2(&self) -> usize {
        self.l2
    }

    /// All involutions of `S_n`.
    pub fn all(n: usize) -> Vec<InvolutionPerm> {
        Perm::all(n)
            .filter(Perm::is_involution)
            .map(|p| InvolutionPerm::new(p).expect("filtered"))
            .collect()
    }
}

impl fmt::Display for InvolutionPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl Serialize for InvolutionPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.perm.serialize(s)
    }
}

/// `r(C) = (n+1) - max_j d_j`, the minimal rank of `g - cI`.
pub fn r_of(c: &JordanClass) -> usize {
    c.n_plus_1 - c.max_block_count()
}

/// `l(C) = min(r(C), [(n+1)/2])`.
pub fn l_of(c: &JordanClass) -> usize {
    r_of(c).min(c.n_plus_1 / 2)
}

/// `xi_t` = sum over labels of the `t`-th largest block, `t = 1..d_1`.
pub fn nu_tilde_star(c: &JordanClass) -> Partition {
    let mut data: Vec<&EigenData> = c.eigen_data.iter().collect();
    data.sort_by(|a, b| b.blocks.len().cmp(&a.blocks.len()));
    let d1 = data[0].blocks.len();
    let parts: Vec<usize> = (0..d1)
        .map(|t| {
            data.iter()
                .map(|e| e.blocks.get(t).copied().unwrap_or(0))
                .sum()
        })
        .collect();
    Partition::new(parts).expect("column sums of non-increasing rows are non-increasing")
}

/// `m_l = (1, n+1)(2, n)...(l, n+2-l)`.
pub fn m_l_element(n_plus_1: usize, l: usize) -> Result<InvolutionPerm> {
    if 2 * l > n_plus_1 {
        return Err(Error::OutOfRange(format!("l = {l} exceeds [{n_plus_1}/2]")));
    }
    let mut images: Vec<usize> = (0..n_plus_1).collect();
    for i in 0..l {
        images.swap(i, n_plus_1 - 1 - i);
    }
    InvolutionPerm::new(Perm::from_images(images)?)
}

/// `m_C = m_{l(C)}`.
pub fn m_c(c: &JordanClass) -> InvolutionPerm {
    m_l_element(c.n_plus_1, l_of(c)).expect("l(C) <= [(n+1)/2]")
}

fn check_degree(c: &JordanClass, w: &Perm) -> Result<()> {
    if w.degree() != c.n_plus_1 {
        return Err(Error::InvalidPermutation(format!(
            "{w} has degree {}, class lives in SL({})",
            w.degree(),
            c.n_plus_1
        )));
    }
    Ok(())
}

/// Whether `C` meets `BwB` for an involution `w`: `l_2(w) <= l(C)`.
pub fn decide_involution_cell(c: &JordanClass, w: &Perm) -> Result<bool> {
    check_degree(c, w)?;
    let w = InvolutionPerm::new(w.clone())?;
    Ok(w.l2 <= l_of(c))
}

/// `l_2(w) <= r(C)`; false certifies that `C` misses `BwB`.
pub fn necessary_condition(c: &JordanClass, w: &Perm) -> Result<bool> {
    check_degree(c, w)?;
    Ok(w.l2() <= r_of(c))
}

/// Whether the whole `W`-class of cycle type `lambda` lies in `W_C`.
pub fn class_in_wc(c: &JordanClass, lambda: &Partition) -> Result<bool> {
    lambda.dominance_leq(&nu_tilde_star(c))
}

/// Type A Weyl group acting on `n_plus_1` points.
pub fn symmetric_group(n_plus_1: usize) -> Result<WeylGroup> {
    Ok(WeylGroup::new(CartanType::new(Family::A, n_plus_1 - 1)?))
}

/// Permutations below `top` in the Bruhat order, in lexicographic order.
pub fn bruhat_interval_below(top: &Perm) -> Result<Vec<Perm>> {
    let n = top.degree();
    if n > 8 {
        return Err(Error::GuardExceeded {
            what: format!("Bruhat interval in S_{n}"),
            size: (1..=n as u64).product(),
            limit: 40320,
        });
    }
    let g = symmetric_group(n)?;
    let t = g.from_permutation(top)?;
    let mut out = Vec::new();
    for p in Perm::all(n) {
        if g.bruhat_leq(&g.from_permutation(&p)?, &t)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// `W_C^- = {w : w <= m_C}`.
pub fn enumerate_wc_minus(c: &JordanClass) -> Result<Vec<Perm>> {
    bruhat_interval_below(m_c(c).perm())
}

/// Semisimple with two eigenvalues, or a single eigenvalue with blocks of
/// size at most 2 and at least one of size 2.
pub fn is_spherical(c: &JordanClass) -> bool {
    match c.eigen_data.as_slice() {
        [_, _] => c.is_semisimple(),
        [e] => e.blocks.iter().all(|&b| b <= 2) && e.blocks[0] == 2,
        _ => false,
    }
}

pub const SPHERICAL_CAVEAT: &str = "valid when the characteristic of the field is not 2";

#[derive(Debug, Clone, Serialize)]
pub struct SphericalWc {
    pub elements: Vec<InvolutionPerm>,
    pub caveat: &'static str,
}

/// `W_C = {w : w^2 = 1, l_2(w) <= r(C)}` for a spherical class.
pub fn spherical_wc(c: &JordanClass) -> Result<SphericalWc> {
    if c.n_plus_1 > 10 {
        return Err(Error::GuardExceeded {
            what: "involutions".into(),
            size: c.n_plus_1 as u64,
            limit: 10,
        });
    }
    if !is_spherical(c) {
        return Err(Error::NotSpherical(c.to_string()));
    }
    let r = r_of(c);
    let elements = InvolutionPerm::all(c.n_plus_1)
        .into_iter()
        .filter(|w| w.l2 <= r)
        .collect();
    Ok(SphericalWc {
        elements,
        caveat: SPHERICAL_CAVEAT,
    })
}

/// Consequences of `C' ⊆ closure(C)` that can be checked on Jordan data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    /// Every involution cell met by `C'` is met by `C`.
    pub involutions: bool,
    /// `m_{C'} <= m_C`.
    pub m_c: bool,
}

impl ClosureCheck {
    pub fn holds(&self) -> bool {
        self.involutions && self.m_c
    }
}

pub fn monotone_under_closure(smaller: &JordanClass, larger: &JordanClass) -> Result<ClosureCheck> {
    if smaller.n_plus_1 != larger.n_plus_1 {
        return Err(Error::InvalidJordanClass(format!(
            "SL({}) vs SL({})",
            smaller.n_plus_1, larger.n_plus_1
        )));
    }
    let mut involutions = true;
    for w in InvolutionPerm::all(smaller.n_plus_1) {
        if decide_involution_cell(smaller, w.perm())? && !decide_involution_cell(larger, w.perm())?
        {
            involutions = false;
            break;
        }
    }
    let g = symmetric_group(smaller.n_plus_1)?;
    let a = g.from_permutation(m_c(smaller).perm())?;
    let b = g.from_permutation(m_c(larger).perm())?;
    Ok(ClosureCheck {
        involutions,
        m_c: g.bruhat_leq(&a, &b)?,
    })
}

/// Full-class verdict for the cycle type of `w`.
pub fn class_verdict_for(c: &JordanClass, w: &Perm) -> Result<bool> {
    check_degree(c, w)?;
    class_in_wc(c, &cycle_type(w))
}
