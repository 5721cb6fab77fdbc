use bruhat_cells::partitions::{cycle_type, two_one_below, two_one_below_by_length, Partition};
use bruhat_cells::perm::Perm;
use bruhat_cells::sl_criteria::{
    decide_involution_cell, l_of, m_c, m_l_element, necessary_condition, nu_tilde_star, r_of,
    InvolutionPerm, JordanClass,
};
use bruhat_cells::Error;
use proptest::prelude::*;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn perm(s: &str, n: usize) -> Perm {
    Perm::parse(s, n).unwrap()
}

#[test]
fn shapes() {
    assert_eq!(part(&[3, 1]).dual(), part(&[2, 1, 1]));
    assert_eq!(Partition::two_one_shape(5, 2).unwrap(), part(&[2, 2, 1]));
    assert_eq!(Partition::two_one_shape(4, 2).unwrap(), part(&[2, 2]));
    for p in 2..=9 {
        for l in 0..=p / 2 {
            let two_rows: Vec<usize> = [p - l, l].into_iter().filter(|&x| x > 0).collect();
            assert_eq!(
                Partition::two_one_shape(p, l).unwrap().dual(),
                part(&two_rows)
            );
        }
    }
    assert!(Partition::two_one_shape(4, 3).is_err());
}

#[test]
fn dominance_examples() {
    assert!(part(&[1, 1, 1]).dominance_leq(&part(&[2, 1])).unwrap());
    assert!(!part(&[3]).dominance_leq(&part(&[2, 1])).unwrap());
    assert!(matches!(
        part(&[3]).dominance_leq(&part(&[2])),
        Err(Error::WeightMismatch(..))
    ));
}

#[test]
fn two_one_below_examples() {
    assert!(two_one_below(5, 2, &part(&[2, 2, 1])).unwrap());
    assert!(!two_one_below(5, 2, &part(&[1, 1, 1, 1, 1])).unwrap());
    for mu in Partition::all_of(7) {
        assert!(two_one_below(7, 0, &mu).unwrap());
    }
}

#[test]
fn cycle_types() {
    assert_eq!(cycle_type(&Perm::identity(4)), part(&[1, 1, 1, 1]));
    assert_eq!(cycle_type(&perm("(1 4)(2 3)", 4)), part(&[2, 2]));
    assert_eq!(cycle_type(&perm("(1 2 3)", 4)), part(&[3, 1]));
}

#[test]
fn partition_counts() {
    // p(n) for n = 1..10
    let counts: Vec<usize> = (1..=10).map(|n| Partition::all_of(n).len()).collect();
    assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn class_invariants() {
    let central = JordanClass::from_blocks(&[&[1, 1, 1, 1]]).unwrap();
    let regular = JordanClass::from_blocks(&[&[1], &[1], &[1], &[1]]).unwrap();
    let transvection = JordanClass::from_blocks(&[&[2, 1, 1]]).unwrap();
    assert_eq!((r_of(&central), l_of(&central)), (0, 0));
    assert_eq!((r_of(&regular), l_of(&regular)), (3, 2));
    assert_eq!((r_of(&transvection), l_of(&transvection)), (1, 1));
    assert_eq!(m_c(&central).perm(), &Perm::identity(4));
    assert_eq!(m_c(&transvection).perm(), &perm("(1 4)", 4));
    assert_eq!(nu_tilde_star(&central), part(&[1, 1, 1, 1]));
    assert_eq!(
        nu_tilde_star(&JordanClass::from_blocks(&[&[4]]).unwrap()),
        part(&[4])
    );
    let mixed = JordanClass::from_blocks(&[&[2, 1], &[2]]).unwrap();
    assert_eq!(nu_tilde_star(&mixed), part(&[4, 1]));
}

#[test]
fn nested_involutions() {
    assert_eq!(m_l_element(4, 0).unwrap().perm(), &Perm::identity(4));
    assert_eq!(m_l_element(4, 2).unwrap().perm(), &perm("(1 4)(2 3)", 4));
    assert_eq!(m_l_element(5, 1).unwrap().perm(), &perm("(1 5)", 5));
    assert!(m_l_element(5, 3).is_err());
    let regular3 = JordanClass::from_blocks(&[&[1], &[1], &[1]]).unwrap();
    assert_eq!(m_c(&regular3).perm(), &perm("(1 3)", 3));
}

#[test]
fn involution_decisions() {
    let t = JordanClass::from_blocks(&[&[2, 1, 1]]).unwrap();
    assert!(decide_involution_cell(&t, &perm("(1 2)", 4)).unwrap());
    assert!(!decide_involution_cell(&t, &perm("(1 2)(3 4)", 4)).unwrap());
    assert!(decide_involution_cell(&t, &perm("(1 2 3)", 4)).is_err());
    assert!(!necessary_condition(&t, &perm("(1 2 3)", 4)).unwrap());
    let central = JordanClass::from_blocks(&[&[1, 1, 1, 1]]).unwrap();
    assert!(!necessary_condition(&central, &perm("(1 2)", 4)).unwrap());
}

#[test]
fn involution_counts() {
    // telephone numbers
    let counts: Vec<usize> = (1..=7).map(|n| InvolutionPerm::all(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 10, 26, 76, 232]);
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 1..8).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn same_weight_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..=12).prop_flat_map(|p| {
        let all = Partition::all_of(p);
        (prop::sample::select(all.clone()), prop::sample::select(all))
    })
}

fn permutation() -> impl Strategy<Value = Perm> {
    (1usize..=8)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in partition(6)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().weight(), p.weight());
        prop_assert_eq!(p.dual().len(), p.parts()[0]);
    }

    #[test]
    fn dominance_reverses_under_dual((a, b) in same_weight_pair()) {
        prop_assert_eq!(a.dominance_leq(&b).unwrap(), b.dual().dominance_leq(&a.dual()).unwrap());
        if a.dominance_leq(&b).unwrap() && b.dominance_leq(&a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn cycle_type_of_involution_is_two_one_shape(w in permutation()) {
        let lambda = cycle_type(&w);
        prop_assert_eq!(lambda.weight(), w.degree());
        if w.is_involution() {
            prop_assert_eq!(lambda, Partition::two_one_shape(w.degree(), w.l2()).unwrap());
        }
        prop_assert_eq!(cycle_type(&w.inverse()), cycle_type(&w));
    }

    #[test]
    fn two_one_below_sides_agree((mu, l) in (1usize..=12).prop_flat_map(|p| {
        (prop::sample::select(Partition::all_of(p)), 0..=p / 2)
    })) {
        let p = mu.weight();
        prop_assert_eq!(two_one_below(p, l, &mu).unwrap(), two_one_below_by_length(p, l, &mu).unwrap());
    }

    #[test]
    fn class_invariant_bounds(n in 2usize..=7, k in any::<prop::sample::Index>()) {
        let classes = JordanClass::all_abstract(n);
        let c = &classes[k.index(classes.len())];
        let nu = nu_tilde_star(c);
        prop_assert_eq!(nu.weight(), n);
        prop_assert_eq!(nu.len(), c.max_block_count());
        prop_assert_eq!(r_of(c), n - c.max_block_count());
        prop_assert!(l_of(c) <= n / 2);
        prop_assert_eq!(m_c(c).l2(), l_of(c));
        prop_assert_eq!(c.is_central(), m_c(c).perm().is_identity());
    }
}
