use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::count::lr_coefficient;

/// `N ↦ c^{Nλ}_{Nμ,Nν}` sampled at `N = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchTable {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub values: Vec<BigUint>,
}

pub fn stretched_values(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n_max: u32,
) -> StretchTable {
    let values = (0..=n_max)
        .map(|n| lr_coefficient(&lambda.stretch(n), &mu.stretch(n), &nu.stretch(n)))
        .collect();
    StretchTable {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        values,
    }
}

/// An exact polynomial in `N` with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coefficients: Vec<BigRational>,
}

impl Polynomial {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficients
            .first()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(x));
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("({c})")
            };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}*N"),
                _ => format!("{coeff}*N^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolynomialFit {
    /// The `(d+1)`-th differences vanish at every sample and at least
    /// `d + 2` samples were supplied.
    Confirmed(Polynomial),
    /// No degree can be confirmed with this many samples.
    NotConfirmed { points: usize },
}

impl PolynomialFit {
    pub fn polynomial(&self) -> Option<&Polynomial> {
        match self {
            PolynomialFit::Confirmed(p) => Some(p),
            PolynomialFit::NotConfirmed { .. } => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.polynomial().map(Polynomial::degree)
    }
}

/// Newton forward-difference interpolation of `values[N]`, `N = 0, 1, ...`.
///
/// Degree `d` is reported only if one surplus difference row vanishes,
/// i.e. with at least `d + 2` samples.
pub fn fit_polynomial(values: &[BigUint]) -> Result<PolynomialFit> {
    if values.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: values.len(),
        });
    }
    let mut rows: Vec<Vec<BigInt>> = vec![values.iter().map(|v| BigInt::from(v.clone())).collect()];
    // rows[j] holds the j-th forward differences.
    let mut degree = None;
    for d in 0..values.len() - 1 {
        let prev = &rows[d];
        let next: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        let vanishes = next.iter().all(Zero::is_zero);
        rows.push(next);
        if vanishes {
            degree = Some(d);
            break;
        }
    }
    let Some(degree) = degree else {
        return Ok(PolynomialFit::NotConfirmed {
            points: values.len(),
        });
    };

    // Σ_j Δ^j f(0) · binom(N, j), expanded into powers of N.
    let mut coefficients = vec![BigRational::zero(); degree + 1];
    let mut falling = vec![BigRational::one()];
    let mut factorial = BigInt::one();
    for (j, row) in rows.iter().enumerate().take(degree + 1) {
        if j > 0 {
            factorial *= BigInt::from(j);
            // falling ← falling · (N − (j − 1))
            let shift = BigRational::from_integer(BigInt::from(j - 1));
            let mut next = vec![BigRational::zero(); falling.len() + 1];
            for (k, c) in falling.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &shift;
            }
            falling = next;
        }
        let scale = BigRational::new(row[0].clone(), factorial.clone());
        for (k, c) in falling.iter().enumerate() {
            coefficients[k] += c * &scale;
        }
    }
    while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
        coefficients.pop();
    }
    Ok(PolynomialFit::Confirmed(Polynomial { coefficients }))
}
