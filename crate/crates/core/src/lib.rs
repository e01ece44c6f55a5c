//! Exact counting for Littlewood-Richardson coefficients and the quiver
//! semi-invariants that produce them, with the machinery needed to build,
//! verify and report counterexamples to stretched log-concavity.
//!
//! * [`partition`]: partitions, conjugation, stretching, skew shapes.
//! * [`lr`]: LR fillings, a brute-force enumerator, a memoized counter,
//!   multi-factor coefficients and exact polynomial fitting.
//! * [`quiver`]: quivers, the Euler form, weights, generalized Kronecker
//!   quivers and their semi-invariant dimensions.
//! * [`families`]: the explicit counterexample families, their bijections,
//!   two-row Horn counting and log-concavity reports.

pub mod error;
pub mod families;
pub mod lr;
pub mod partition;
pub mod quiver;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};

pub use num_bigint::BigUint;
