//! Weyl group combinatorics for conjugacy classes meeting Bruhat cells,
//! the explicit criteria for SL(n+1), and a brute-force oracle over prime
//! fields.

pub mod conjugacy;
pub mod coxeter;
mod error;
pub mod oracle;
pub mod partitions;
pub mod perm;
pub mod report;
pub mod sl_criteria;

pub use error::{Error, Result};
