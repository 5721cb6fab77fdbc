//! Bruhat decomposition of invertible matrices by pivot elimination.

use super::field::PrimeField;
use super::matrix::MatrixFq;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// `g = b1 * wdot * b2` with `b1`, `b2` upper triangular and `wdot` the
/// permutation matrix of `w`.
#[derive(Debug, Clone)]
pub struct BruhatFactors {
    pub b1: MatrixFq,
    pub w: Perm,
    pub wdot: MatrixFq,
    pub b2: MatrixFq,
}

/// Reduces `a` to a monomial matrix: columns left to right, the pivot is the
/// lowest nonzero entry; entries above it are cleared with row operations and
/// entries to its right with column operations. Each operation is also
/// applied to `left` (rows) or `right` (columns) when given.
fn eliminate(
    a: &mut MatrixFq,
    mut left: Option<&mut MatrixFq>,
    mut right: Option<&mut MatrixFq>,
) -> Result<Vec<usize>> {
    let f = a.field();
    let n = a.n();
    let mut pivots = Vec::with_capacity(n);
    for j in 0..n {
        let i = (0..n)
            .rev()
            .find(|&i| a.get(i, j) != 0)
            .ok_or(Error::SingularMatrix)?;
        let inv = f.inv(a.get(i, j)).expect("pivot is nonzero");
        for r in 0..i {
            let x = a.get(r, j);
            if x != 0 {
                let c = f.neg(f.mul(x, inv));
                a.add_row_multiple(r, i, c);
                if let Some(l) = left.as_deref_mut() {
                    l.add_row_multiple(r, i, c);
                }
            }
        }
        for k in j + 1..n {
            let x = a.get(i, k);
            if x != 0 {
                let c = f.neg(f.mul(x, inv));
                a.add_col_multiple(k, j, c);
                if let Some(rm) = right.as_deref_mut() {
                    rm.add_col_multiple(k, j, c);
                }
            }
        }
        pivots.push(i);
    }
    Ok(pivots)
}

/// The `w` with `g` in `BwB`, `B` the upper triangular matrices.
pub fn bruhat_bb(g: &MatrixFq) -> Result<Perm> {
    let mut a = *g;
    let pivots = eliminate(&mut a, None, None)?;
    Perm::from_images(pivots)
}

/// Decomposition with explicit factors.
pub fn bruhat_factors(g: &MatrixFq) -> Result<BruhatFactors> {
    let f = g.field();
    let n = g.n();
    let mut a = *g;
    let mut l = MatrixFq::identity(f, n)?;
    let mut r = MatrixFq::identity(f, n)?;
    let pivots = eliminate(&mut a, Some(&mut l), Some(&mut r))?;
    // a = l g r is monomial: a = wdot * d with d diagonal
    let w = Perm::from_images(pivots.clone())?;
    let wdot = MatrixFq::permutation(f, &w)?;
    let d: Vec<u8> = (0..n).map(|j| a.get(pivots[j], j)).collect();
    let d = MatrixFq::diag(f, &d)?;
    Ok(BruhatFactors {
        b1: l.inverse()?,
        w,
        wdot,
        b2: d.mul(&r.inverse()?),
    })
}

/// Representative of the longest permutation with determinant 1: the
/// antidiagonal matrix with ones except for the bottom-left entry, which is
/// the sign of the reversal.
pub fn w0_dot(field: PrimeField, n: usize) -> Result<MatrixFq> {
    MatrixFq::monomial(field, &longest_perm(n))
}

pub fn longest_perm(n: usize) -> Perm {
    Perm::from_images((0..n).rev().collect()).expect("reversal is a permutation")
}

/// The `w` with `g` in `BwB^-`; uses `B^- = w0 B w0`, so `g` lies in
/// `BwB^-` iff `g * w0dot` lies in `B(w w0)B`.
pub fn bruhat_b_bminus(g: &MatrixFq) -> Result<Perm> {
    let n = g.n();
    let u = bruhat_bb(&g.mul(&w0_dot(g.field(), n)?))?;
    Ok(u.compose(&longest_perm(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn m(p: u32, rows: &[&[i64]]) -> MatrixFq {
        MatrixFq::from_rows(f(p), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_cases() {
        let s1 = Perm::parse("(1 2)", 2).unwrap();
        assert!(bruhat_bb(&MatrixFq::identity(f(5), 2).unwrap())
            .unwrap()
            .is_identity());
        assert_eq!(bruhat_bb(&m(5, &[&[0, 1], &[-1, 0]])).unwrap(), s1);
        assert_eq!(bruhat_bb(&m(3, &[&[1, 0], &[1, 1]])).unwrap(), s1);
        assert_eq!(
            bruhat_bb(&m(3, &[&[1, 1], &[0, 1]])).unwrap(),
            Perm::identity(2)
        );
        assert_eq!(
            bruhat_bb(&m(3, &[&[1, 1], &[1, 1]])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn w0_dot_sign() {
        assert_eq!(w0_dot(f(5), 2).unwrap(), m(5, &[&[0, 1], &[-1, 0]]));
        for n in 2..=5 {
            assert_eq!(w0_dot(f(7), n).unwrap().det(), 1);
        }
    }

    #[test]
    fn opposite_cells() {
        let d = MatrixFq::diag(f(5), &[2, 3]).unwrap();
        assert!(bruhat_b_bminus(&d).unwrap().is_identity());
        let w0 = w0_dot(f(5), 3).unwrap();
        assert_eq!(bruhat_b_bminus(&w0).unwrap(), longest_perm(3));
        let lower = m(5, &[&[1, 0, 0], &[2, 1, 0], &[3, 4, 1]]);
        assert!(bruhat_b_bminus(&lower).unwrap().is_identity());
    }

    #[test]
    fn factors_reconstruct() {
        let g = m(7, &[&[0, 3, 1], &[2, 5, 0], &[1, 1, 1]]);
        let fac = bruhat_factors(&g).unwrap();
        assert!(fac.b1.is_upper_triangular() && fac.b2.is_upper_triangular());
        assert_eq!(fac.b1.mul(&fac.wdot).mul(&fac.b2), g);
        assert_eq!(fac.w, bruhat_bb(&g).unwrap());
    }
}
