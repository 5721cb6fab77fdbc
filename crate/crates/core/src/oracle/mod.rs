//! Brute-force ground truth over prime fields: Bruhat decomposition of
//! matrices, conjugacy classes of `SL(n, F_q)` and the cells they meet.

mod census;
mod classes;
mod decompose;
mod empirical;
mod field;
mod matrix;
mod validate;

pub use census::{
    borel_elements, cell_census, check_census, check_deodhar, deodhar_run, CellCensus, DeodharRun,
};
pub use classes::{
    borel_order, check_pair, classes_over, geometric_class, gl_orbit, gl_order,
    jordan_representative, sl_order, DEFAULT_PAIRS, ORDER_LIMIT,
};
pub use decompose::{
    bruhat_b_bminus, bruhat_bb, bruhat_factors, longest_perm, w0_dot, BruhatFactors,
};
pub use empirical::{empirical_from_orbit, empirical_wc, EmpiricalTable, PermOrder};
pub use field::PrimeField;
pub use matrix::{MatrixFq, MAX_DIM};
pub use validate::validate_predictions;
