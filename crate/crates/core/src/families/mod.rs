//! Explicit families of non-log-concave coefficients.
//!
//! For `λ(n) = (4^n, 3^{2n}, 2^n)` and `μ(n) = (3^n, 2^n, 1^n)` the stretched
//! sequence `N ↦ c^{Nλ(n)}_{Nμ(n),Nμ(n)}` starts `1, binom(n+2,2),
//! binom(n+5,5), ...`, and the parabolic Kostka family
//! `K_{Nλ(n), NR(n)}` with `λ(n) = (2^n, 1^{2n})`, `R(n) = four copies of (1^n)`
//! shares those values. Both are the Kronecker dimensions
//! `dim SI(θ(3), (n,n))_{(−N,N)}`.

mod bijections;
mod horn;
mod report;

pub use bijections::{
    complete_rows_5_6, compositions, construct_d, construct_e, d_shape, e_exponents, e_shape,
    D_COLUMN_TYPES,
};
pub use horn::{
    horn_count_two_rows, horn_monomial, horn_nonvanishing_two_rows, horn_triples,
    triple_from_monomial, two_row_partitions, HornTriple,
};
pub use report::{
    binomial, counterexample_report, family_value, log_concavity_check, Check, ComparisonRecord,
    Family, ReportConfig,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, multi_lr_coefficient};
use crate::partition::Partition;

/// `(λ(n), μ(n)) = ((4^n, 3^{2n}, 2^n), (3^n, 2^n, 1^n))`.
pub fn okounkov_family(n: u32) -> (Partition, Partition) {
    let lambda = Partition::from_exponents(&[(4, n), (3, 2 * n), (2, n)]).expect("decreasing");
    let mu = Partition::from_exponents(&[(3, n), (2, n), (1, n)]).expect("decreasing");
    (lambda, mu)
}

/// The rectangle `(width^height)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub width: u32,
    pub height: u32,
}

impl Rectangle {
    pub fn new(width: u32, height: u32) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyRectangle { width, height });
        }
        Ok(Rectangle { width, height })
    }

    pub fn partition(&self) -> Partition {
        Partition::rectangle(self.width, self.height)
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.width, self.height)
    }
}

impl FromStr for Rectangle {
    type Err = Error;

    /// `m^l` for `l` rows of length `m`; a bare `m` is a single row.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = |reason| Error::MalformedToken {
            token: text.to_string(),
            reason,
        };
        let (w, h) = text.split_once('^').unwrap_or((text, "1"));
        let width = w
            .trim()
            .parse()
            .map_err(|_| bad("width is not an integer"))?;
        let height = h
            .trim()
            .parse()
            .map_err(|_| bad("height is not an integer"))?;
        Rectangle::new(width, height)
    }
}

/// `R = ((m_1^{l_1}), ..., (m_k^{l_k}))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectangleSequence(Vec<Rectangle>);

impl RectangleSequence {
    pub fn new(rectangles: Vec<Rectangle>) -> Self {
        RectangleSequence(rectangles)
    }

    pub fn rectangles(&self) -> &[Rectangle] {
        &self.0
    }

    /// `NR`: every width multiplied by `N`. `N = 0` gives the empty sequence.
    pub fn stretch(&self, n: u32) -> RectangleSequence {
        if n == 0 {
            return RectangleSequence(Vec::new());
        }
        RectangleSequence(
            self.0
                .iter()
                .map(|r| Rectangle {
                    width: r.width * n,
                    height: r.height,
                })
                .collect(),
        )
    }

    pub fn partitions(&self) -> Vec<Partition> {
        self.0.iter().map(Rectangle::partition).collect()
    }

    pub fn size(&self) -> u64 {
        self.0
            .iter()
            .map(|r| r.width as u64 * r.height as u64)
            .sum()
    }
}

impl fmt::Display for RectangleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| format!("({r})")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(λ(n), R(n)) = ((2^n, 1^{2n}), ((1^n), (1^n), (1^n), (1^n)))`.
pub fn kostka_family(n: u32) -> (Partition, RectangleSequence) {
    let lambda = Partition::from_exponents(&[(2, n), (1, 2 * n)]).expect("decreasing");
    let rect = Rectangle::new(1, n.max(1)).expect("nonempty");
    (lambda, RectangleSequence(vec![rect; 4]))
}

/// `K_{λ,R} = c^λ_{(m_1^{l_1}),...,(m_k^{l_k})}`.
pub fn parabolic_kostka(lambda: &Partition, rects: &RectangleSequence) -> BigUint {
    if rects.rectangles().is_empty() {
        return BigUint::from(u8::from(lambda.is_empty()));
    }
    if lambda.size() != rects.size() {
        return BigUint::from(0u8);
    }
    multi_lr_coefficient(lambda, &rects.partitions())
}

/// `c^{mλ(n)}_{mμ(n),mμ(n)}`, computed directly.
pub fn okounkov_value(n: u32, m: u32) -> BigUint {
    let (lambda, mu) = okounkov_family(n);
    let mu = mu.stretch(m);
    lr_coefficient(&lambda.stretch(m), &mu, &mu)
}

/// `K_{mλ(n), mR(n)}`, computed directly.
pub fn kostka_value(n: u32, m: u32) -> BigUint {
    let (lambda, rects) = kostka_family(n);
    parabolic_kostka(&lambda.stretch(m), &rects.stretch(m))
}

/// Both sides of `K_{mλ(n), mR(n)} = c^{((4m)^n,(3m)^n,(2m)^n,m^n)}_{((3m)^n,(2m)^n,m^n),((2m)^n,m^{2n})}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaLrIdentity {
    pub kostka: BigUint,
    pub lr: BigUint,
}

impl KostkaLrIdentity {
    pub fn holds(&self) -> bool {
        self.kostka == self.lr
    }
}

pub fn kostka_lr_identity(m: u32, n: u32) -> KostkaLrIdentity {
    let outer = Partition::from_exponents(&[(4 * m, n), (3 * m, n), (2 * m, n), (m, n)])
        .expect("decreasing");
    let first = Partition::from_exponents(&[(3 * m, n), (2 * m, n), (m, n)]).expect("decreasing");
    let second = Partition::from_exponents(&[(2 * m, n), (m, 2 * n)]).expect("decreasing");
    KostkaLrIdentity {
        kostka: kostka_value(n, m),
        lr: lr_coefficient(&outer, &first, &second),
    }
}

pub fn kostka_lr_identity_check(m: u32, n: u32) -> bool {
    kostka_lr_identity(m, n).holds()
}
