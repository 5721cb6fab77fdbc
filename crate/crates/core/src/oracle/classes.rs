//! Conjugacy classes of `SL(n, F_q)` merged under `GL(n, F_q)`, which is
//! how classes over the algebraic closure look once eigenvalues split.

use std::collections::{BTreeMap, HashSet};

use super::field::PrimeField;
use super::matrix::MatrixFq;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::sl_criteria::{EigenData, JordanClass};

/// `(n, q)` pairs the oracle runs without an override.
pub const DEFAULT_PAIRS: &[(usize, u32)] =
    &[(2, 3), (2, 5), (2, 7), (3, 2), (3, 3), (3, 5), (4, 2)];

/// Largest `|SL(n, F_q)|` handled without an override.
pub const ORDER_LIMIT: u64 = 10_000_000;

pub fn gl_order(n: usize, q: u32) -> u64 {
    let q = q as u64;
    let qn = q.pow(n as u32);
    (0..n as u32).map(|i| qn - q.pow(i)).product()
}

pub fn sl_order(n: usize, q: u32) -> u64 {
    gl_order(n, q) / (q as u64 - 1)
}

/// Order of the upper triangular subgroup of `SL(n, F_q)`.
pub fn borel_order(n: usize, q: u32) -> u64 {
    let q = q as u64;
    (q - 1).pow(n as u32 - 1) * q.pow((n * (n - 1) / 2) as u32)
}

/// Checks that `(n, q)` is a prime field pair within the default guard.
pub fn check_pair(n: usize, q: u32, allow_large: bool) -> Result<PrimeField> {
    let field = PrimeField::new(q)?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("matrix dimension {n} < 2")));
    }
    if allow_large {
        return Ok(field);
    }
    if !DEFAULT_PAIRS.contains(&(n, q)) || sl_order(n, q) > ORDER_LIMIT {
        return Err(Error::GuardExceeded {
            what: format!("oracle for SL({n}, F_{q})"),
            size: sl_order(n, q),
            limit: ORDER_LIMIT,
        });
    }
    Ok(field)
}

/// Jordan normal form of a class whose eigenvalues lie in `F_q`.
pub fn jordan_representative(c: &JordanClass, field: PrimeField) -> Result<MatrixFq> {
    let values = c.values_mod(field.p())?;
    let mut blocks = Vec::new();
    for (e, &v) in c.eigen_data().iter().zip(&values) {
        for &b in &e.blocks {
            blocks.push((v as u8, b));
        }
    }
    MatrixFq::jordan(field, &blocks)
}

/// Orbit of `x` under conjugation by `GL(n, F_q)`, sorted.
pub fn gl_orbit(x: &MatrixFq) -> Vec<MatrixFq> {
    let f = x.field();
    let n = x.n();
    let zeta = f.primitive_root();
    let zeta_inv = f.inv(zeta).expect("nonzero");
    let minus_one = f.neg(1);
    let mut seen: HashSet<MatrixFq> = HashSet::from([*x]);
    let mut frontier = vec![*x];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for y in &frontier {
            let mut push = |z: MatrixFq| {
                if seen.insert(z) {
                    next.push(z);
                }
            };
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        // (I + E_ij) y (I - E_ij)
                        let mut z = *y;
                        z.add_row_multiple(i, j, 1);
                        z.add_col_multiple(j, i, minus_one);
                        push(z);
                    }
                }
            }
            if zeta != 1 {
                let mut z = *y;
                z.scale_row(0, zeta);
                z.scale_col(0, zeta_inv);
                push(z);
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    let mut out: Vec<MatrixFq> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// The class of `c` in `SL(n, F_q)` as a set of matrices.
pub fn geometric_class(c: &JordanClass, q: u32, allow_large: bool) -> Result<Vec<MatrixFq>> {
    let field = check_pair(c.n_plus_1(), q, allow_large)?;
    Ok(gl_orbit(&jordan_representative(c, field)?))
}

/// Every class of `SL(n, F_q)` (over the closure) whose eigenvalues lie in
/// `F_q`, labelled by the eigenvalue, e.g. `c3` for 3.
pub fn classes_over(n: usize, q: u32) -> Result<Vec<JordanClass>> {
    let field = PrimeField::new(q)?;
    let units: Vec<u8> = field.units().collect();
    let mut out = Vec::new();
    fn rec(
        field: PrimeField,
        units: &[u8],
        k: usize,
        rest: usize,
        det: u8,
        cur: &mut Vec<(u8, Partition)>,
        out: &mut Vec<JordanClass>,
    ) {
        if rest == 0 {
            if det == 1 {
                let eigen_data = cur
                    .iter()
                    .map(|(v, p)| EigenData {
                        label: format!("c{v}"),
                        blocks: p.parts().to_vec(),
                    })
                    .collect();
                let values: BTreeMap<String, i64> = cur
                    .iter()
                    .map(|(v, _)| (format!("c{v}"), *v as i64))
                    .collect();
                let total = cur.iter().map(|(_, p)| p.weight()).sum();
                let c = JordanClass::new(total, eigen_data)
                    .and_then(|c| c.with_values(values))
                    .expect("valid by construction");
                out.push(c);
            }
            return;
        }
        for i in k..units.len() {
            for w in 1..=rest {
                for p in Partition::all_of(w) {
                    let d = field.mul(det, field.pow(units[i], w as u32));
                    cur.push((units[i], p));
                    rec(field, units, i + 1, rest - w, d, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(field, &units, 0, n, 1, &mut Vec::new(), &mut out);
    Ok(out)
}
