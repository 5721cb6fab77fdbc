use std::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};
use crate::perm::Perm;

pub const MAX_DIM: usize = 6;

/// Square matrix over a prime field, entries stored row-major in the first
/// `n * n` bytes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixFq {
    field: PrimeField,
    n: u8,
    e: [u8; MAX_DIM * MAX_DIM],
}

impl MatrixFq {
    pub fn zero(field: PrimeField, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::OutOfRange(format!(
                "matrix dimension {n} not in 1..={MAX_DIM}"
            )));
        }
        Ok(MatrixFq {
            field,
            n: n as u8,
            e: [0; MAX_DIM * MAX_DIM],
        })
    }

    pub fn identity(field: PrimeField, n: usize) -> Result<Self> {
        let mut m = Self::zero(field, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zero(field, n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::OutOfRange("matrix rows must be square".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        Ok(m)
    }

    /// Diagonal matrix with the given entries.
    pub fn diag(field: PrimeField, d: &[u8]) -> Result<Self> {
        let mut m = Self::zero(field, d.len())?;
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x % field.p() as u8);
        }
        Ok(m)
    }

    /// `I + a E_ij`.
    pub fn elementary(field: PrimeField, n: usize, i: usize, j: usize, a: u8) -> Result<Self> {
        let mut m = Self::identity(field, n)?;
        m.set(i, j, field.add(m.get(i, j), a));
        Ok(m)
    }

    /// Permutation matrix with `e_j -> e_{w(j)}`.
    pub fn permutation(field: PrimeField, w: &Perm) -> Result<Self> {
        let mut m = Self::zero(field, w.degree())?;
        for j in 0..w.degree() {
            m.set(w.apply(j), j, 1);
        }
        Ok(m)
    }

    /// Determinant-one representative of `w`: the permutation matrix with
    /// its first column scaled by the sign of `w`.
    pub fn monomial(field: PrimeField, w: &Perm) -> Result<Self> {
        let mut m = Self::permutation(field, w)?;
        if w.inversions() % 2 == 1 {
            let i = w.apply(0);
            m.set(i, 0, field.neg(1));
        }
        Ok(m)
    }

    /// Block-diagonal Jordan matrix; blocks carry their eigenvalue on the
    /// diagonal and 1 on the superdiagonal.
    pub fn jordan(field: PrimeField, blocks: &[(u8, usize)]) -> Result<Self> {
        let n = blocks.iter().map(|b| b.1).sum();
        let mut m = Self::zero(field, n)?;
        let mut at = 0;
        for &(c, size) in blocks {
            for k in 0..size {
                m.set(at + k, at + k, c % field.p() as u8);
                if k + 1 < size {
                    m.set(at + k, at + k + 1, 1);
                }
            }
            at += size;
        }
        Ok(m)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.n as usize + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.e[i * self.n as usize + j] = x;
    }

    /// Row-major entries, one byte each.
    pub fn to_bytes(&self) -> &[u8] {
        &self.e[..self.n() * self.n()]
    }

    pub fn mul(&self, other: &MatrixFq) -> MatrixFq {
        assert_eq!(
            (self.n, self.field),
            (other.n, other.field),
            "matrix shapes differ"
        );
        let n = self.n();
        let p = self.field.p();
        let mut out = *self;
        for i in 0..n {
            for j in 0..n {
                let s: u32 = (0..n)
                    .map(|k| self.get(i, k) as u32 * other.get(k, j) as u32)
                    .sum();
                out.set(i, j, (s % p) as u8);
            }
        }
        out
    }

    /// `row_dst += a * row_src`.
    #[inline]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, a: u8) {
        let f = self.field;
        for j in 0..self.n() {
            let v = f.add(self.get(dst, j), f.mul(a, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// `col_dst += a * col_src`.
    #[inline]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, a: u8) {
        let f = self.field;
        for i in 0..self.n() {
            let v = f.add(self.get(i, dst), f.mul(a, self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    #[inline]
    pub fn scale_row(&mut self, i: usize, a: u8) {
        for j in 0..self.n() {
            let v = self.field.mul(a, self.get(i, j));
            self.set(i, j, v);
        }
    }

    #[inline]
    pub fn scale_col(&mut self, j: usize, a: u8) {
        for i in 0..self.n() {
            let v = self.field.mul(a, self.get(i, j));
            self.set(i, j, v);
        }
    }

    pub fn transpose(&self) -> MatrixFq {
        let mut out = *self;
        for i in 0..self.n() {
            for j in 0..self.n() {
                out.set(i, j, self.get(j, i));
            }
        }
        out
    }

    pub fn det(&self) -> u8 {
        let f = self.field;
        let n = self.n();
        let mut a = *self;
        let mut det = 1u8;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| a.get(r, c) != 0) else {
                return 0;
            };
            if r != c {
                for j in 0..n {
                    let (x, y) = (a.get(r, j), a.get(c, j));
                    a.set(r, j, y);
                    a.set(c, j, x);
                }
                det = f.neg(det);
            }
            let piv = a.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv).expect("pivot is nonzero");
            for r2 in c + 1..n {
                let x = a.get(r2, c);
                if x != 0 {
                    a.add_row_multiple(r2, c, f.neg(f.mul(x, inv)));
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<MatrixFq> {
        let f = self.field;
        let n = self.n();
        let mut a = *self;
        let mut inv = Self::identity(f, n)?;
        for c in 0..n {
            let r = (c..n)
                .find(|&r| a.get(r, c) != 0)
                .ok_or(Error::SingularMatrix)?;
            if r != c {
                a.add_row_multiple(c, r, 1);
                inv.add_row_multiple(c, r, 1);
            }
            let s = f.inv(a.get(c, c)).expect("pivot is nonzero");
            a.scale_row(c, s);
            inv.scale_row(c, s);
            for r2 in 0..n {
                let x = a.get(r2, c);
                if r2 != c && x != 0 {
                    a.add_row_multiple(r2, c, f.neg(x));
                    inv.add_row_multiple(r2, c, f.neg(x));
                }
            }
        }
        Ok(inv)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n()).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }
}

impl fmt::Debug for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[", self.field.p())?;
        for i in 0..self.n() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.n()).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
