//! Integer partitions and skew shapes.
//!
//! A [`Partition`] is always stored in canonical form: weakly decreasing,
//! strictly positive parts. Zero padding such as `(3,1,0)` is accepted on
//! input and dropped.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing.
    /// Trailing zeros are stripped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(value^count, ...)` in the usual exponent notation.
    pub fn from_exponents(blocks: &[(u32, u32)]) -> Result<Self> {
        let parts = blocks
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k as usize))
            .collect();
        Partition::new(parts)
    }

    /// The rectangle with `height` rows of length `width`.
    pub fn rectangle(width: u32, height: u32) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; height as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut out = vec![0u32; width];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// `Nλ`: every part multiplied by `n`.
    pub fn stretch(&self, n: u32) -> Partition {
        if n == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|&p| p * n).collect())
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `v` and `v^k` tokens separated by commas, e.g. `4^2,3^4,2`.
    /// The empty string is the empty partition.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text);
        if text.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for raw in text.split(',') {
            let token = raw.trim();
            let bad = |reason| Error::MalformedToken {
                token: token.to_string(),
                reason,
            };
            let (value, count) = match token.split_once('^') {
                Some((v, k)) => (v.trim(), Some(k.trim())),
                None => (token, None),
            };
            let value: u32 = value
                .parse()
                .map_err(|_| bad("part is not a nonnegative integer"))?;
            let count: u32 = match count {
                Some(k) => k.parse().map_err(|_| bad("exponent is not an integer"))?,
                None => 1,
            };
            if count == 0 {
                return Err(bad("exponent must be at least 1"));
            }
            parts.extend(std::iter::repeat_n(value, count as usize));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions in tests and presets. Panics on
/// non-decreasing input.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("literal partition must be weakly decreasing")
    };
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// First column (0-based) of row `i`.
    pub fn row_start(&self, i: usize) -> u32 {
        self.inner.part(i)
    }

    pub fn row_len(&self, i: usize) -> usize {
        (self.outer.part(i) - self.inner.part(i)) as usize
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.rows()).map(|i| self.row_len(i)).collect()
    }

    pub fn boxes(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }
}
