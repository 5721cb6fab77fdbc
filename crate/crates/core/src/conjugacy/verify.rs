//! Verification suites over a Weyl group; each returns a [`Report`].

use std::collections::BTreeSet;

use super::ascent::{elements_without_ascent_to_max, SimSearch, SIM_SEARCH_LIMIT};
use super::classes::{all_classes, twisted_class};
use super::maximal::{compute_m, compute_m_and_m_prime, Search};
use super::subsets::{catalog_j, enumerate_j, enumerate_j_prime, m_of_j};
use crate::coxeter::{DiagramAutomorphism, NodeSet, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::report::{CheckKind, Report};

/// Names accepted by [`run_checks`], in the order `all` runs them.
pub const CHECK_NAMES: &[&str] = &[
    "m-classification",
    "m-prime",
    "min-twisted",
    "coxeter-bound",
    "phi",
    "ascent",
    "sim",
    "conjugate-j",
];

fn subject(group: &WeylGroup) -> String {
    group.cartan_type().to_string()
}

fn format_set(group: &WeylGroup, s: &BTreeSet<WeylElement>) -> String {
    let v: Vec<String> = s.iter().map(|w| group.format_element(w)).collect();
    format!("{{{}}}", v.join(", "))
}

/// `M` equals the images of the subsets with Properties (1) and (2) and the
/// images of the catalog.
pub fn verify_classification(group: &WeylGroup, search: Search) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let m: BTreeSet<WeylElement> = compute_m(group, search)?.elements().into_iter().collect();
    let from_j = enumerate_j(group)?
        .into_iter()
        .map(|j| m_of_j(group, j))
        .collect::<Result<BTreeSet<_>>>()?;
    let from_catalog = catalog_j(group.cartan_type())
        .into_iter()
        .map(|e| m_of_j(group, e.nodes))
        .collect::<Result<BTreeSet<_>>>()?;
    let mismatch = |a: &BTreeSet<WeylElement>, b: &BTreeSet<WeylElement>| {
        let diff: BTreeSet<WeylElement> = a.symmetric_difference(b).copied().collect();
        (!diff.is_empty()).then(|| format_set(group, &diff))
    };
    report
        .push(&sub, "m-equals-j", CheckKind::Exact, mismatch(&m, &from_j))
        .with_detail(format!("|M| = {}, |J| = {}", m.len(), from_j.len()));
    report
        .push(
            &sub,
            "j-equals-catalog",
            CheckKind::Exact,
            mismatch(&from_j, &from_catalog),
        )
        .with_detail(format!("catalog size {}", from_catalog.len()));
    let bad = m.iter().find(|w| !group.is_involution(w));
    report.push(
        &sub,
        "m-involutions",
        CheckKind::Exact,
        bad.map(|w| group.format_element(w)),
    );
    Ok(report)
}

/// `M` is inside `M'`, and every member of `M'` is `w0 w_{0,J_m}` with
/// `J_m` satisfying Property (1).
pub fn verify_m_prime(group: &WeylGroup, search: Search) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let (m, mp) = compute_m_and_m_prime(group, search)?;
    let outside = m.elements().into_iter().find(|w| !mp.contains(w));
    report.push(
        &sub,
        "m-inside-m-prime",
        CheckKind::Exact,
        outside.map(|w| group.format_element(&w)),
    );
    let jp = enumerate_j_prime(group)?;
    let mut bad = None;
    for member in &mp.members {
        if !jp.contains(&member.fixed) || m_of_j(group, member.fixed)? != member.element {
            bad = Some(member.formatted.clone());
            break;
        }
    }
    report
        .push(&sub, "m-prime-from-j-prime", CheckKind::Exact, bad)
        .with_detail(format!("|M'| = {}, |J'| = {}", mp.len(), jp.len()));
    Ok(report)
}

/// For every `m` in `M`, `w0 m` is the unique minimal element of its
/// `delta0`-twisted class.
pub fn verify_cor_min_twisted(group: &WeylGroup, search: Search) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let d0 = DiagramAutomorphism::delta0(group);
    let w0 = group.longest();
    let mut bad = None;
    let m = compute_m(group, search)?;
    for member in &m.members {
        let u = group.mul(&w0, &member.element);
        let c = twisted_class(group, &u, &d0)?;
        if c.min_length_elements() != [u] {
            bad = Some(member.formatted.clone());
            break;
        }
    }
    report
        .push(&sub, "min-twisted", CheckKind::Exact, bad)
        .with_detail(format!("{} members", m.len()));
    Ok(report)
}

/// Every Coxeter element lies below every non-identity member of `M`.
pub fn verify_coxeter_below_m(group: &WeylGroup, search: Search) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let cox = group.coxeter_elements();
    let m = compute_m(group, search)?;
    let id = group.identity();
    let mut bad = None;
    'outer: for member in m.members.iter().filter(|x| x.element != id) {
        for c in &cox {
            if !group.bruhat_leq(c, &member.element)? {
                bad = Some(format!(
                    "{} vs {}",
                    group.format_element(c),
                    member.formatted
                ));
                break 'outer;
            }
        }
    }
    report
        .push(&sub, "coxeter-bound", CheckKind::Exact, bad)
        .with_detail(format!("{} Coxeter elements", cox.len()));
    Ok(report)
}

/// `u -> w0 u` maps the maximal elements of each class onto the minimal
/// elements of the `delta0`-twisted class of `w0 w`.
pub fn verify_phi(group: &WeylGroup) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let d0 = DiagramAutomorphism::delta0(group);
    let w0 = group.longest();
    let classes = all_classes(group, false)?;
    let mut bad = None;
    for c in &classes {
        let image: BTreeSet<WeylElement> = c
            .max_length_elements()
            .iter()
            .map(|u| group.mul(&w0, u))
            .collect();
        let t = twisted_class(group, &group.mul(&w0, c.representative()), &d0)?;
        let mins: BTreeSet<WeylElement> = t.min_length_elements().into_iter().collect();
        if image != mins {
            bad = Some(group.format_element(c.representative()));
            break;
        }
    }
    report
        .push(&sub, "phi", CheckKind::Exact, bad)
        .with_detail(format!("{} classes", classes.len()));
    Ok(report)
}

/// Every element ascends to a maximal-length element of its class.
pub fn verify_ascent(group: &WeylGroup) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let classes = all_classes(group, false)?;
    let bad = classes.iter().find_map(|c| {
        elements_without_ascent_to_max(group, c)
            .first()
            .map(|w| group.format_element(w))
    });
    report
        .push(&sub, "ascent-to-max", CheckKind::Exact, bad)
        .with_detail(format!("{} classes", classes.len()));
    Ok(report)
}

/// The maximal-length elements of each class form one `~`-component.
pub fn verify_sim(group: &WeylGroup) -> Result<Report> {
    let mut report = Report::new();
    let sub = subject(group);
    let search = SimSearch::new(group)?;
    let classes = all_classes(group, false)?;
    let bad = classes.iter().find_map(|c| {
        let max = c.max_length_elements();
        (search.components(&max) != 1).then(|| group.format_element(c.representative()))
    });
    report
        .push(&sub, "max-sim-connected", CheckKind::Exact, bad)
        .with_detail(format!("{} classes", classes.len()));
    Ok(report)
}

fn maps_onto(group: &WeylGroup, w: &WeylElement, j: NodeSet, k: NodeSet) -> bool {
    if j.len() != k.len() {
        return false;
    }
    let rank = group.rank();
    j.labels().all(|a| {
        let col = w.column(a - 1);
        let mut support = col.iter().enumerate().filter(|(_, &c)| c != 0);
        match (support.next(), support.next()) {
            (Some((b, &1)), None) => k.contains(b + 1) && b < rank,
            _ => false,
        }
    })
}

/// For `J, K` with Property (1): `m_J` and `m_K` are conjugate iff some
/// `delta0`-fixed `w` maps `J` onto `K`.
pub fn verify_conjugate_j(group: &WeylGroup) -> Result<Report> {
    group.check_order_at_most("conjugate-J search", SIM_SEARCH_LIMIT, false)?;
    let mut report = Report::new();
    let sub = subject(group);
    let fixed: Vec<WeylElement> = group
        .elements()?
        .into_iter()
        .filter(|w| group.delta0_element(w) == *w)
        .collect();
    let jp = enumerate_j_prime(group)?;
    let mut classes = Vec::new();
    for &j in &jp {
        classes.push(super::classes::conj_class(group, &m_of_j(group, j)?)?);
    }
    let mut bad = None;
    'outer: for (a, &j) in jp.iter().enumerate() {
        for (b, &k) in jp.iter().enumerate() {
            let conjugate = classes[a].contains(&m_of_j(group, k)?);
            debug_assert_eq!(conjugate, classes[b].contains(&m_of_j(group, j)?));
            let mapped = fixed.iter().any(|w| maps_onto(group, w, j, k));
            if conjugate != mapped {
                bad = Some(format!("{j} {k}"));
                break 'outer;
            }
        }
    }
    report
        .push(&sub, "conjugate-j", CheckKind::Exact, bad)
        .with_detail(format!(
            "{} subsets, {} fixed elements",
            jp.len(),
            fixed.len()
        ));
    Ok(report)
}

/// Runs the named suites (`all` selects every suite the group's size
/// permits). Skipped suites are recorded as notes.
pub fn run_checks(group: &WeylGroup, names: &[String]) -> Result<Report> {
    let all = names.iter().any(|n| n == "all");
    let selected: Vec<&str> = if all {
        CHECK_NAMES.to_vec()
    } else {
        for n in names {
            if !CHECK_NAMES.contains(&n.as_str()) {
                return Err(Error::Parse(format!("unknown check {n:?}")));
            }
        }
        CHECK_NAMES
            .iter()
            .copied()
            .filter(|c| names.iter().any(|n| n == c))
            .collect()
    };
    let search = Search::auto(group);
    let enumerable = group.order() <= crate::coxeter::ENUMERATION_LIMIT;
    let small = group.order() <= SIM_SEARCH_LIMIT;
    let mut report = Report::new();
    for name in selected {
        let needs_full = matches!(name, "phi" | "ascent");
        let needs_small = matches!(name, "sim" | "conjugate-j");
        if all && ((needs_full && !enumerable) || (needs_small && !small)) {
            report.note(format!("{name} skipped: |W| = {} too large", group.order()));
            continue;
        }
        let r = match name {
            "m-classification" => verify_classification(group, search)?,
            "m-prime" => verify_m_prime(group, search)?,
            "min-twisted" => verify_cor_min_twisted(group, search)?,
            "coxeter-bound" => verify_coxeter_below_m(group, search)?,
            "phi" => verify_phi(group)?,
            "ascent" => verify_ascent(group)?,
            "sim" => verify_sim(group)?,
            _ => verify_conjugate_j(group)?,
        };
        report.extend(r);
    }
    Ok(report)
}
