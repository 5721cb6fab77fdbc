use std::collections::{HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use super::cartan::{CartanType, MAX_RANK};
use super::nodes::NodeSet;
use super::roots::RootSystem;
use crate::error::{Error, Result};

/// Default ceiling on |W| for operations that touch the whole group.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

const STRIDE: usize = MAX_RANK;

/// Element of a Weyl group, stored as the integer matrix of its action on
/// the simple-root basis: entry `(i, j)` is the coefficient of `alpha_i` in
/// `w(alpha_j)`. Equal elements have identical matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    ty: CartanType,
    mat: [i8; STRIDE * STRIDE],
}

impl WeylElement {
    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    /// Coefficient of `alpha_i` in `w(alpha_j)`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.mat[i * STRIDE + j] as i32
    }

    /// Image of the simple root `alpha_j` (0-based).
    pub fn column(&self, j: usize) -> Vec<i32> {
        (0..self.ty.rank()).map(|i| self.entry(i, j)).collect()
    }

    /// Canonical byte encoding of the matrix (row-major, `rank x rank`).
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.ty.rank();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.mat[i * STRIDE + j] as u8)
            .collect()
    }

    #[inline]
    fn col_is_negative(&self, j: usize) -> bool {
        let n = self.ty.rank();
        let mut s = 0i32;
        for i in 0..n {
            s += self.mat[i * STRIDE + j] as i32;
        }
        s < 0
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ty.rank();
        write!(f, "{}[", self.ty)?;
        for i in 0..n {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", (0..n).map(|j| self.entry(i, j)).join(" "))?;
        }
        write!(f, "]")
    }
}

/// Parabolic subset `J` of the simple roots together with its longest
/// element and the positive roots in its span.
#[derive(Debug, Clone)]
pub struct ParabolicSubset {
    pub nodes: NodeSet,
    pub longest: WeylElement,
    pub positive_roots: Vec<Vec<i32>>,
}

/// Weyl group of a simple Cartan type acting on its root system.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    identity: WeylElement,
    gens: Vec<WeylElement>,
    w0: WeylElement,
    delta0: Vec<usize>,
    allow_large: bool,
}

impl WeylGroup {
    pub fn new(ty: CartanType) -> Self {
        let rs = RootSystem::new(ty);
        let n = ty.rank();
        let mut identity = WeylElement {
            ty,
            mat: [0; STRIDE * STRIDE],
        };
        for i in 0..n {
            identity.mat[i * STRIDE + i] = 1;
        }
        let gens = (0..n)
            .map(|j| {
                let mut m = identity;
                for i in 0..n {
                    // s_j(alpha_j) = -alpha_j, s_j(alpha_k) = alpha_k - <alpha_k, alpha_j^vee> alpha_j
                    let c = rs.cartan_integer(i, j);
                    m.mat[j * STRIDE + i] = (m.mat[j * STRIDE + i] as i32 - c) as i8;
                }
                m
            })
            .collect();
        let mut g = WeylGroup {
            rs,
            identity,
            gens,
            w0: identity,
            delta0: (0..n).collect(),
            allow_large: false,
        };
        g.w0 = g.longest_in(NodeSet::full(n));
        g.delta0 = (0..n)
            .map(|j| {
                let img = g.w0.column(j);
                let k = img
                    .iter()
                    .position(|&x| x != 0)
                    .expect("w0 maps a simple root to a nonzero root");
                debug_assert_eq!(img[k], -1);
                k
            })
            .collect();
        g
    }

    pub fn from_type_str(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    /// Lifts the |W| guard for orbit-local computations.
    pub fn with_allow_large(mut self, allow: bool) -> Self {
        self.allow_large = allow;
        self
    }

    pub fn allow_large(&self) -> bool {
        self.allow_large
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> u64 {
        self.cartan_type().weyl_order()
    }

    /// Fails when |W| exceeds the guard and no override was given.
    pub fn check_guard(&self, what: &str) -> Result<()> {
        self.check_order_at_most(what, ENUMERATION_LIMIT, self.allow_large)
    }

    pub(crate) fn check_order_at_most(
        &self,
        what: &str,
        limit: u64,
        overridable: bool,
    ) -> Result<()> {
        if self.order() > limit && !(overridable && self.allow_large) {
            return Err(Error::GuardExceeded {
                what: format!("{what} for {}", self.cartan_type()),
                size: self.order(),
                limit,
            });
        }
        Ok(())
    }

    pub fn identity(&self) -> WeylElement {
        self.identity
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(self.gens[i - 1])
    }

    #[cfg(test)]
    pub(crate) fn gen(&self, i: usize) -> WeylElement {
        self.gens[i]
    }

    pub fn longest(&self) -> WeylElement {
        self.w0
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_member(&self, w: &WeylElement) -> Result<()> {
        if w.ty != self.cartan_type() {
            return Err(Error::MismatchedGroups(self.cartan_type(), w.ty));
        }
        Ok(())
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
        self.check_member(u)?;
        self.check_member(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut out = WeylElement {
            ty: u.ty,
            mat: [0; STRIDE * STRIDE],
        };
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i32;
                for k in 0..n {
                    s += u.mat[i * STRIDE + k] as i32 * v.mat[k * STRIDE + j] as i32;
                }
                out.mat[i * STRIDE + j] = s as i8;
            }
        }
        out
    }

    /// `w * s_j`, 0-based `j`.
    pub(crate) fn mul_gen_right(&self, w: &WeylElement, j: usize) -> WeylElement {
        let n = self.rank();
        let mut out = *w;
        for k in 0..n {
            let c = if k == j {
                2
            } else {
                self.rs.cartan_integer(k, j)
            };
            if c == 0 {
                continue;
            }
            for i in 0..n {
                let v = out.mat[i * STRIDE + k] as i32 - c * w.mat[i * STRIDE + j] as i32;
                out.mat[i * STRIDE + k] = v as i8;
            }
        }
        out
    }

    /// `s_j * w`, 0-based `j`.
    pub(crate) fn mul_gen_left(&self, j: usize, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut out = *w;
        for col in 0..n {
            let mut pair = 0i32;
            for k in 0..n {
                pair += w.mat[k * STRIDE + col] as i32 * self.rs.cartan_integer(k, j);
            }
            let v = w.mat[j * STRIDE + col] as i32 - pair;
            out.mat[j * STRIDE + col] = v as i8;
        }
        out
    }

    /// `s_j w s_j`, 0-based `j`.
    pub(crate) fn conj_gen(&self, j: usize, w: &WeylElement) -> WeylElement {
        self.mul_gen_right(&self.mul_gen_left(j, w), j)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut u = *w;
        let mut inv = self.identity;
        while let Some(j) = self.first_right_descent(&u) {
            u = self.mul_gen_right(&u, j);
            inv = self.mul_gen_right(&inv, j);
        }
        inv
    }

    pub fn act_on_root(&self, w: &WeylElement, root: &[i32]) -> Result<Vec<i32>> {
        self.check_member(w)?;
        if root.len() != self.rank() {
            return Err(Error::OutOfRange(format!(
                "root has {} coordinates, expected {}",
                root.len(),
                self.rank()
            )));
        }
        Ok(self.apply(w, root))
    }

    pub(crate) fn apply(&self, w: &WeylElement, v: &[i32]) -> Vec<i32> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| w.mat[i * STRIDE + j] as i32 * v[j]).sum())
            .collect()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        let n = self.rank();
        let mut colsum = [0i32; STRIDE];
        for (j, c) in colsum.iter_mut().enumerate().take(n) {
            for i in 0..n {
                *c += w.mat[i * STRIDE + j] as i32;
            }
        }
        self.rs
            .positive_roots()
            .iter()
            .filter(|a| a.iter().zip(&colsum).map(|(x, c)| x * c).sum::<i32>() < 0)
            .count()
    }

    /// Whether `l(w s_j) < l(w)`, 1-based `j`.
    pub fn is_right_descent(&self, w: &WeylElement, j: usize) -> bool {
        w.col_is_negative(j - 1)
    }

    /// Whether `l(s_j w) < l(w)`, 1-based `j`.
    pub fn is_left_descent(&self, w: &WeylElement, j: usize) -> bool {
        self.inverse(w).col_is_negative(j - 1)
    }

    fn first_right_descent(&self, w: &WeylElement) -> Option<usize> {
        (0..self.rank()).find(|&j| w.col_is_negative(j))
    }

    /// Reduced word as 1-based node labels, read left to right.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut u = *w;
        let mut word = Vec::new();
        while let Some(j) = self.first_right_descent(&u) {
            u = self.mul_gen_right(&u, j);
            word.push(j + 1);
        }
        word.reverse();
        word
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity;
        for &i in word {
            self.check_index(i)?;
            w = self.mul_gen_right(&w, i - 1);
        }
        Ok(w)
    }

    /// Parses a space- or comma-separated word of 1-based labels.
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let word = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad word letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_word(&word)
    }

    pub fn format_word(&self, w: &WeylElement) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().join(" ")
        }
    }

    /// Longest element of `W_J` by greedy ascent.
    pub fn longest_element(&self, j: NodeSet) -> Result<WeylElement> {
        j.check_rank(self.rank())?;
        Ok(self.longest_in(j))
    }

    pub(crate) fn longest_in(&self, j: NodeSet) -> WeylElement {
        let mut w = self.identity;
        while let Some(k) = j.indices().find(|&k| !w.col_is_negative(k)) {
            w = self.mul_gen_right(&w, k);
        }
        w
    }

    pub fn parabolic(&self, j: NodeSet) -> Result<ParabolicSubset> {
        j.check_rank(self.rank())?;
        let positive_roots = self
            .rs
            .positive_roots()
            .iter()
            .filter(|a| a.iter().enumerate().all(|(i, &x)| x == 0 || j.contains0(i)))
            .cloned()
            .collect();
        Ok(ParabolicSubset {
            nodes: j,
            longest: self.longest_in(j),
            positive_roots,
        })
    }

    /// `delta0(alpha_i) = -w0(alpha_i)` as a permutation of 1-based labels;
    /// entry `i - 1` holds the image of label `i`.
    pub fn delta0_permutation(&self) -> Vec<usize> {
        self.delta0.iter().map(|k| k + 1).collect()
    }

    pub(crate) fn delta0_index(&self, i: usize) -> usize {
        self.delta0[i]
    }

    pub fn delta0_root(&self, root: &[i32]) -> Result<Vec<i32>> {
        let img = self.act_on_root(&self.w0, root)?;
        Ok(img.into_iter().map(|x| -x).collect())
    }

    pub fn delta0_element(&self, w: &WeylElement) -> WeylElement {
        self.mul(&self.mul(&self.w0, w), &self.w0)
    }

    pub fn delta0_nodes(&self, j: NodeSet) -> NodeSet {
        NodeSet::from_labels(j.indices().map(|i| self.delta0[i] + 1))
    }

    /// Bruhat order via the lifting property along right descents of `w`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.check_member(u)?;
        self.check_member(w)?;
        Ok(self.bruhat_leq_with_lengths(u, self.length(u), w, self.length(w)))
    }

    pub(crate) fn bruhat_leq_with_lengths(
        &self,
        u: &WeylElement,
        mut lu: usize,
        w: &WeylElement,
        mut lw: usize,
    ) -> bool {
        let (mut u, mut w) = (*u, *w);
        loop {
            if lu > lw {
                return false;
            }
            if lu == 0 {
                return true;
            }
            if lu == lw {
                return u == w;
            }
            let j = self.first_right_descent(&w).expect("w has positive length");
            w = self.mul_gen_right(&w, j);
            lw -= 1;
            if u.col_is_negative(j) {
                u = self.mul_gen_right(&u, j);
                lu -= 1;
            }
        }
    }

    /// Products of all simple reflections in every order, deduplicated.
    pub fn coxeter_elements(&self) -> Vec<WeylElement> {
        let n = self.rank();
        let mut set: Vec<WeylElement> = (0..n)
            .permutations(n)
            .map(|order| {
                order
                    .into_iter()
                    .fold(self.identity, |w, k| self.mul_gen_right(&w, k))
            })
            .collect();
        set.sort();
        set.dedup();
        set
    }

    /// Every element of W, sorted. Refuses |W| above the enumeration limit.
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        self.check_order_at_most("full enumeration", ENUMERATION_LIMIT, false)?;
        let mut seen: HashSet<WeylElement> = HashSet::with_capacity(self.order() as usize);
        let mut queue = VecDeque::new();
        seen.insert(self.identity);
        queue.push_back(self.identity);
        while let Some(w) = queue.pop_front() {
            for j in 0..self.rank() {
                let x = self.mul_gen_right(&w, j);
                if seen.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().collect();
        all.sort();
        debug_assert_eq!(all.len() as u64, self.order());
        Ok(all)
    }

    /// Image of `w` under the diagram automorphism `perm` (0-based images).
    pub(crate) fn permute_nodes(&self, perm: &[usize], w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut out = *w;
        for i in 0..n {
            for j in 0..n {
                out.mat[perm[i] * STRIDE + perm[j]] = w.mat[i * STRIDE + j];
            }
        }
        out
    }

    pub fn is_involution(&self, w: &WeylElement) -> bool {
        self.mul(w, w) == self.identity
    }

    /// Simple roots fixed by `w`, as 1-based labels.
    pub fn fixed_simple_roots(&self, w: &WeylElement) -> NodeSet {
        let n = self.rank();
        NodeSet::from_labels(
            (0..n)
                .filter(|&j| (0..n).all(|i| w.entry(i, j) == (i == j) as i32))
                .map(|j| j + 1),
        )
    }
}
