//! Log-concavity comparisons along the two families.
//!
//! Every value in a record is the Kronecker dimension
//! `dim SI(θ(3), (n,n))_{(−N,N)}`; the first two are computed through the
//! quiver sum and the Horn count and then checked against the closed forms
//! `binom(n+2,2)` and `binom(n+5,5)`. Direct LR or parabolic Kostka
//! evaluations are added as further checks for small `n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::quiver::kronecker_si_dim;

use super::horn::horn_count_two_rows;
use super::{kostka_value, okounkov_value};

/// `binom(n, k)`, exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `c^{Nλ(n)}_{Nμ(n),Nμ(n)}`.
    Okounkov,
    /// `K_{Nλ(n), NR(n)}`.
    Kostka,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Okounkov => "okounkov",
            Family::Kostka => "kostka",
        }
    }

    /// The direct evaluation at stretch `m`.
    pub fn direct_value(self, n: u32, m: u32) -> BigUint {
        match self {
            Family::Okounkov => okounkov_value(n, m),
            Family::Kostka => kostka_value(n, m),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "okounkov" | "lr" => Ok(Family::Okounkov),
            "kostka" | "parabolic-kostka" => Ok(Family::Kostka),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// A named equality between two independently computed values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: BigUint, rhs: BigUint) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `f(N−1) f(N+1)` against `f(N)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRecord {
    pub context: String,
    pub n: u32,
    pub stretch: u32,
    /// `f(N−1), f(N), f(N+1)`.
    pub values: [BigUint; 3],
    /// `f(N−1) f(N+1)`.
    pub lhs: BigUint,
    /// `f(N)^2`.
    pub rhs: BigUint,
    /// `lhs ≤ rhs`.
    pub holds: bool,
    pub checks: Vec<Check>,
}

impl ComparisonRecord {
    pub fn checks_pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }
}

/// Compares `f(N−1) f(N+1)` with `f(N)^2`. `f(0)` is taken to be 1 without
/// calling `values_at`.
pub fn log_concavity_check<F>(
    context: impl Into<String>,
    n: u32,
    stretch: u32,
    mut values_at: F,
) -> ComparisonRecord
where
    F: FnMut(u32) -> BigUint,
{
    assert!(stretch >= 1, "stretch must be at least 1");
    let mut at = |k: u32| if k == 0 { BigUint::one() } else { values_at(k) };
    let values = [at(stretch - 1), at(stretch), at(stretch + 1)];
    let lhs = &values[0] * &values[2];
    let rhs = &values[1] * &values[1];
    ComparisonRecord {
        context: context.into(),
        n,
        stretch,
        holds: lhs <= rhs,
        lhs,
        rhs,
        values,
        checks: Vec::new(),
    }
}

/// `f(N) = dim SI(θ(3), (n,n))_{(−N,N)}`, shared by both families. `N = 2`
/// goes through the Horn count.
pub fn family_value(n: u32, stretch: u32) -> BigUint {
    match stretch {
        0 => BigUint::one(),
        2 => horn_count_two_rows(n),
        _ => kronecker_si_dim(3, n, stretch),
    }
}

/// Bounds for the expensive cross-checks in [`counterexample_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportConfig {
    /// Direct evaluation at `N = 1` for `n ≤ direct_one`.
    pub direct_one: u32,
    /// Direct evaluation at `N = 2` for `n ≤ direct_two`.
    pub direct_two: u32,
    /// Quiver-sum evaluation at `N = 2` for `n ≤ quiver_two`.
    pub quiver_two: u32,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            direct_one: 6,
            direct_two: 2,
            quiver_two: 12,
        }
    }
}

impl ReportConfig {
    /// No cross-checks beyond the two closed forms.
    pub fn minimal() -> Self {
        ReportConfig {
            direct_one: 0,
            direct_two: 0,
            quiver_two: 0,
        }
    }
}

/// One record per `n` in `lo..=hi` comparing `f(0) f(2)` with `f(1)^2` for
/// the given family. Records come back in increasing `n`.
pub fn counterexample_report(
    family: Family,
    lo: u32,
    hi: u32,
    config: &ReportConfig,
) -> Result<Vec<ComparisonRecord>> {
    if lo == 0 || lo > hi {
        return Err(Error::BadRange { lo, hi });
    }
    let one = |n: u32| record(family, n, config);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((lo..=hi).into_par_iter().map(one).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((lo..=hi).map(one).collect())
    }
}

fn record(family: Family, n: u32, config: &ReportConfig) -> ComparisonRecord {
    let first = kronecker_si_dim(3, n, 1);
    let second = horn_count_two_rows(n);
    let mut checks = vec![
        Check::new(
            "f(1) quiver sum = binom(n+2,2)",
            first.clone(),
            binomial(n as u64 + 2, 2),
        ),
        Check::new(
            "f(2) Horn count = binom(n+5,5)",
            second.clone(),
            binomial(n as u64 + 5, 5),
        ),
    ];
    if n <= config.quiver_two {
        checks.push(Check::new(
            "f(2) quiver sum = Horn count",
            kronecker_si_dim(3, n, 2),
            second.clone(),
        ));
    }
    if n <= config.direct_one {
        checks.push(Check::new(
            format!("f(1) direct {family}"),
            family.direct_value(n, 1),
            first.clone(),
        ));
    }
    if n <= config.direct_two {
        checks.push(Check::new(
            format!("f(2) direct {family}"),
            family.direct_value(n, 2),
            second.clone(),
        ));
    }
    let mut rec = log_concavity_check(format!("{family} n={n}"), n, 1, |k| match k {
        1 => first.clone(),
        _ => second.clone(),
    });
    rec.checks = checks;
    rec
}
