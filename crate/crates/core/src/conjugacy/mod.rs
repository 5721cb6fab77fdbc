//! Conjugacy and twisted conjugacy in Weyl groups, the maximal sets `M` and
//! `M'`, and the subsets of simple roots that classify them.

mod ascent;
mod classes;
mod maximal;
mod subsets;
mod verify;

pub use ascent::{
    ascent_reachable, ascent_step, elements_without_ascent_to_max, sim_reachable, sim_step,
    SimSearch, SIM_SEARCH_LIMIT,
};
pub use classes::{
    all_classes, conj_class, involution_classes_from_parabolics, twisted_class, ConjClass, Orbit,
    TwistedConjClass,
};
pub use maximal::{
    compute_m, compute_m_and_m_prime, compute_m_prime, MaximalMember, MaximalSet, Search,
};
pub use subsets::{
    catalog_j, enumerate_j, enumerate_j_prime, j_of_m, m_of_j, property1, property2, CatalogEntry,
};
pub use verify::{
    run_checks, verify_ascent, verify_classification, verify_conjugate_j, verify_cor_min_twisted,
    verify_coxeter_below_m, verify_m_prime, verify_phi, verify_sim, CHECK_NAMES,
};
