//! Littlewood-Richardson coefficients.
//!
//! Two independent routes are provided: [`enumerate_lr_fillings`] walks every
//! filling cell by cell, and [`lr_coefficient`] counts row profiles with
//! memoization. They are expected to agree everywhere both can run.

mod count;
mod enumerate;
mod filling;
mod stretch;

pub use count::{lr_coefficient, multi_lr_coefficient, partitions_between, LrMemo};
pub use enumerate::{count_by_enumeration, enumerate_lr_fillings, visit_lr_fillings};
pub use filling::{is_lattice_word, is_lr_filling, LrFilling};
pub use stretch::{fit_polynomial, stretched_values, Polynomial, PolynomialFit, StretchTable};
