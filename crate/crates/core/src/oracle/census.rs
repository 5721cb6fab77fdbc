//! Whole-group checks: sizes of the Bruhat cells of `SL(n, F_q)` and the
//! products `BwB^- B`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::classes::{borel_order, check_pair, sl_order};
use super::decompose::{bruhat_bb, bruhat_factors};
use super::empirical::PermOrder;
use super::field::PrimeField;
use super::matrix::MatrixFq;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::report::{CheckKind, Report};

#[derive(Debug, Clone, Serialize)]
pub struct CellCensus {
    pub n: usize,
    pub q: u32,
    pub cells: BTreeMap<Perm, u64>,
    pub total: u64,
    /// Elements whose factors failed to multiply back to them.
    pub reconstruction_failures: u64,
}

/// Every matrix with entries in `F_q`, determinant 1.
fn for_each_sl(field: PrimeField, n: usize, mut f: impl FnMut(&MatrixFq)) -> Result<()> {
    let q = field.p() as u8;
    let mut m = MatrixFq::zero(field, n)?;
    let cells = n * n;
    loop {
        if m.det() == 1 {
            f(&m);
        }
        // odometer over the entries
        let mut k = 0;
        loop {
            if k == cells {
                return Ok(());
            }
            let (i, j) = (k / n, k % n);
            let v = m.get(i, j) + 1;
            if v < q {
                m.set(i, j, v);
                break;
            }
            m.set(i, j, 0);
            k += 1;
        }
    }
}

/// Decomposes every element of `SL(n, F_q)`, found by brute force over all
/// `q^(n^2)` matrices.
pub fn cell_census(n: usize, q: u32, allow_large: bool) -> Result<CellCensus> {
    let field = check_pair(n, q, allow_large)?;
    let mut cells: BTreeMap<Perm, u64> = BTreeMap::new();
    let mut total = 0;
    let mut failures = 0;
    let mut err = None;
    for_each_sl(field, n, |g| match bruhat_factors(g) {
        Ok(fac) => {
            let ok = fac.b1.is_upper_triangular()
                && fac.b2.is_upper_triangular()
                && fac.b1.mul(&fac.wdot).mul(&fac.b2) == *g;
            if !ok {
                failures += 1;
            }
            *cells.entry(fac.w).or_default() += 1;
            total += 1;
        }
        Err(e) => err = Some(e),
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(CellCensus {
        n,
        q,
        cells,
        total,
        reconstruction_failures: failures,
    })
}

pub fn check_census(c: &CellCensus) -> Report {
    let subject = format!("SL({}, F_{})", c.n, c.q);
    let b = borel_order(c.n, c.q);
    let mut rep = Report::new();
    let bad_total = (c.total != sl_order(c.n, c.q)).then(|| c.total.to_string());
    rep.push(&subject, "cells-cover-group", CheckKind::Exact, bad_total)
        .with_detail(format!("|G| = {}", sl_order(c.n, c.q)));
    let mut bad_cell = None;
    for w in Perm::all(c.n) {
        let expected = b * (c.q as u64).pow(w.inversions() as u32);
        let got = c.cells.get(&w).copied().unwrap_or(0);
        if got != expected {
            bad_cell = Some(format!("{w}: {got} != {expected}"));
            break;
        }
    }
    rep.push(&subject, "cell-sizes", CheckKind::Exact, bad_cell);
    let bad_rec = (c.reconstruction_failures > 0).then(|| c.reconstruction_failures.to_string());
    rep.push(&subject, "factors-reconstruct", CheckKind::Exact, bad_rec);
    rep
}

/// Upper triangular matrices of determinant 1.
pub fn borel_elements(field: PrimeField, n: usize) -> Result<Vec<MatrixFq>> {
    let q = field.p() as u8;
    let mut out = vec![MatrixFq::identity(field, n)?];
    // fill the strictly upper part and the first n-1 diagonal entries
    for i in 0..n {
        for j in i..n {
            if i == n - 1 && j == n - 1 {
                continue;
            }
            let range: Vec<u8> = if i == j {
                (1..q).collect()
            } else {
                (0..q).collect()
            };
            out = out
                .into_iter()
                .flat_map(|m| {
                    range.iter().map(move |&v| {
                        let mut m = m;
                        m.set(i, j, v);
                        m
                    })
                })
                .collect();
        }
    }
    for m in &mut out {
        let d: u8 = (0..n - 1).fold(1, |acc, k| field.mul(acc, m.get(k, k)));
        m.set(
            n - 1,
            n - 1,
            field.inv(d).expect("units multiply to a unit"),
        );
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct DeodharRun {
    pub w: Perm,
    pub exhaustive: bool,
    pub pairs: u64,
    pub attained: BTreeSet<Perm>,
}

/// Cells `Bw'B` met by `w_dot b^- b` over pairs `(b^-, b)` from `B^- x B`;
/// exhaustive when `|B|^2 <= budget`, otherwise `budget` seeded samples.
/// The left factor of `BwB^-` is omitted as it does not change the cell.
pub fn deodhar_run(
    w: &Perm,
    q: u32,
    budget: u64,
    seed: u64,
    allow_large: bool,
) -> Result<DeodharRun> {
    let n = w.degree();
    let field = check_pair(n, q, allow_large)?;
    if !allow_large && (n > 3 || q > 5) {
        return Err(Error::GuardExceeded {
            what: format!("B w B^- B for SL({n}, F_{q})"),
            size: borel_order(n, q).pow(2),
            limit: budget,
        });
    }
    let wdot = MatrixFq::monomial(field, w)?;
    let borel = borel_elements(field, n)?;
    let minus: Vec<MatrixFq> = borel.iter().map(|b| wdot.mul(&b.transpose())).collect();
    let mut attained = BTreeSet::new();
    let size = (borel.len() as u64).pow(2);
    let exhaustive = size <= budget;
    if exhaustive {
        for x in &minus {
            for b in &borel {
                attained.insert(bruhat_bb(&x.mul(b))?);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..budget {
            let x = &minus[rng.random_range(0..minus.len())];
            let b = &borel[rng.random_range(0..borel.len())];
            attained.insert(bruhat_bb(&x.mul(b))?);
        }
    }
    Ok(DeodharRun {
        w: w.clone(),
        exhaustive,
        pairs: if exhaustive { size } else { budget },
        attained,
    })
}

pub fn check_deodhar(
    w: &Perm,
    q: u32,
    budget: u64,
    seed: u64,
    allow_large: bool,
) -> Result<Report> {
    let run = deodhar_run(w, q, budget, seed, allow_large)?;
    let order = PermOrder::new(w.degree())?;
    let above = order.above(w);
    let subject = format!("SL({}, F_{q}) w={w}", w.degree());
    let mut rep = Report::new();
    let below = run
        .attained
        .iter()
        .find(|u| !above.contains(*u))
        .map(|u| u.to_string());
    rep.push(&subject, "cells-above-w", CheckKind::Sound, below)
        .with_detail(format!("{} pairs", run.pairs));
    if run.exhaustive {
        let missing: Vec<String> = above
            .difference(&run.attained)
            .map(|u| u.to_string())
            .collect();
        rep.push(
            &subject,
            "all-cells-above-w-attained",
            CheckKind::Complete,
            (!missing.is_empty()).then(|| missing.join(" ")),
        );
    } else {
        rep.note(format!("{subject}: sampled, attainment not checked"));
    }
    Ok(rep)
}
