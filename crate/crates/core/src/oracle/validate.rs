//! Comparison of empirical tables with the predictions for `SL(n+1)`.
//!
//! Sound checks follow from finite data alone: a cell met over `F_q` is met
//! over the closure. Complete checks assert equality with the prediction and
//! can in principle fail when `F_q` is too small.

use std::collections::BTreeSet;

use super::empirical::{EmpiricalTable, PermOrder};
use crate::error::Result;
use crate::partitions::cycle_type;
use crate::perm::Perm;
use crate::report::{CheckKind, Report};
use crate::sl_criteria::{class_in_wc, l_of, m_c, r_of};

fn first_bad<'a, I: IntoIterator<Item = &'a Perm>>(
    it: I,
    bad: impl Fn(&Perm) -> bool,
) -> Option<String> {
    it.into_iter().find(|w| bad(w)).map(|w| w.to_string())
}

fn set_diff(a: &BTreeSet<Perm>, b: &BTreeSet<Perm>) -> Option<String> {
    let d: Vec<String> = a.symmetric_difference(b).map(|w| w.to_string()).collect();
    (!d.is_empty()).then(|| d.join(" "))
}

/// The `S_n` conjugacy classes, each listed once.
fn w_classes(order: &PermOrder) -> Vec<BTreeSet<Perm>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in order.perms() {
        if seen.contains(w) {
            continue;
        }
        let c = order.conjugates(w);
        seen.extend(c.iter().cloned());
        out.push(c);
    }
    out
}

pub fn validate_predictions(t: &EmpiricalTable) -> Result<Report> {
    let c = &t.class;
    let n = c.n_plus_1();
    let order = PermOrder::new(n)?;
    let (r, l) = (r_of(c), l_of(c));
    let mc = m_c(c).perm().clone();
    let below_mc = order.below(&mc);
    let subject = format!("{c} q={}", t.q);
    let mut rep = Report::new();
    let classes = w_classes(&order);
    let contained = |cl: &BTreeSet<Perm>| cl.is_subset(&t.wc);

    // sound
    rep.push(
        &subject,
        "wc-inside-wc-minus",
        CheckKind::Sound,
        first_bad(&t.wc, |w| !t.wc_minus.contains(w)),
    );
    rep.push(
        &subject,
        "l2-at-most-r",
        CheckKind::Sound,
        first_bad(&t.wc, |w| w.l2() > r),
    );
    rep.push(
        &subject,
        "involutions-l2-at-most-l",
        CheckKind::Sound,
        first_bad(&t.wc, |w| w.is_involution() && w.l2() > l),
    );
    rep.push(
        &subject,
        "wc-below-mc",
        CheckKind::Sound,
        first_bad(&t.wc, |w| !below_mc.contains(w)),
    );
    rep.push(
        &subject,
        "wc-minus-below-mc",
        CheckKind::Sound,
        first_bad(&t.wc_minus, |w| !below_mc.contains(w)),
    );
    rep.push(
        &subject,
        "conjugates-below-mc",
        CheckKind::Sound,
        first_bad(&t.wc, |w| !order.conjugates(w).is_subset(&below_mc)),
    );
    let mut dominance_bad = None;
    for cl in &classes {
        let rep_w = cl.first().expect("classes are nonempty");
        if contained(cl) && !class_in_wc(c, &cycle_type(rep_w))? {
            dominance_bad = Some(cycle_type(rep_w).to_string());
            break;
        }
    }
    rep.push(
        &subject,
        "contained-classes-dominated",
        CheckKind::Sound,
        dominance_bad,
    );

    // complete
    let predicted_inv: BTreeSet<Perm> = order
        .perms()
        .iter()
        .filter(|w| w.is_involution() && w.l2() <= l)
        .cloned()
        .collect();
    let emp_inv: BTreeSet<Perm> = t.wc.iter().filter(|w| w.is_involution()).cloned().collect();
    rep.push(
        &subject,
        "involutions-match",
        CheckKind::Complete,
        set_diff(&emp_inv, &predicted_inv),
    );
    let max_witness = match &t.bruhat_max {
        Some(m) if *m == mc => None,
        Some(m) => Some(m.to_string()),
        None => Some(format!(
            "no maximum; maximal {}",
            t.maximal
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )),
    };
    rep.push(
        &subject,
        "bruhat-max-is-mc",
        CheckKind::Complete,
        max_witness,
    )
    .with_detail(format!("m_C = {mc}"));
    rep.push(
        &subject,
        "wc-minus-is-interval",
        CheckKind::Complete,
        set_diff(&t.wc_minus, &below_mc),
    );
    let mut class_bad = None;
    for cl in &classes {
        let lambda = cycle_type(cl.first().expect("nonempty"));
        if contained(cl) != class_in_wc(c, &lambda)? {
            class_bad = Some(lambda.to_string());
            break;
        }
    }
    rep.push(
        &subject,
        "class-containment-matches-dominance",
        CheckKind::Complete,
        class_bad,
    );
    rep.push(
        &subject,
        "wc-minus-below-some-wc",
        CheckKind::Complete,
        first_bad(&t.wc_minus, |w| !t.wc.iter().any(|u| order.leq(w, u))),
    );
    let mut inv_class_bad = None;
    for cl in classes
        .iter()
        .filter(|cl| cl.first().is_some_and(Perm::is_involution))
    {
        if cl.iter().any(|w| t.wc.contains(w)) && !contained(cl) {
            inv_class_bad = Some(cycle_type(cl.first().expect("nonempty")).to_string());
            break;
        }
    }
    rep.push(
        &subject,
        "involution-classes-all-or-nothing",
        CheckKind::Complete,
        inv_class_bad,
    );
    Ok(rep)
}
