//! Memoized LR counting.
//!
//! The skew shape is filled one row at a time. A row of an LR filling is
//! weakly increasing, so it is determined by how many copies of each value
//! it holds. The recursion state after finishing a row is
//!
//! * the index of the next row,
//! * the value counts of the row just placed (column strictness for the
//!   next row only depends on these),
//! * the running content of everything placed so far (the lattice
//!   condition only depends on these).
//!
//! Fillings are never materialized.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// `c^λ_{μ,ν}`. Zero whenever sizes disagree or `μ` or `ν` do not fit in `λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.size() != mu.size() + nu.size()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return BigUint::zero();
    }
    RowCounter::new(lambda, mu, nu).count()
}

struct RowCounter<'a> {
    outer: &'a [u32],
    inner: Vec<u32>,
    content: &'a [u32],
    memo: HashMap<(usize, Vec<u32>, Vec<u32>), BigUint>,
}

impl<'a> RowCounter<'a> {
    fn new(outer: &'a Partition, inner: &Partition, content: &'a Partition) -> Self {
        let rows = outer.len();
        RowCounter {
            outer: outer.parts(),
            inner: (0..rows).map(|i| inner.part(i)).collect(),
            content: content.parts(),
            memo: HashMap::new(),
        }
    }

    fn count(&mut self) -> BigUint {
        let k = self.content.len();
        self.count_from(0, &vec![0; k], &vec![0; k])
    }

    fn count_from(&mut self, row: usize, prev: &[u32], used: &[u32]) -> BigUint {
        if row == self.outer.len() {
            return if used == self.content {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let key = (row, prev.to_vec(), used.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }

        let mut candidates = Vec::new();
        let mut current = vec![0u32; self.content.len()];
        self.row_candidates(row, prev, used, 0, 0, 0, &mut current, &mut candidates);

        let mut total = BigUint::zero();
        let mut next_used = used.to_vec();
        for cand in candidates {
            for (u, (&base, &c)) in next_used.iter_mut().zip(used.iter().zip(&cand)) {
                *u = base + c;
            }
            total += self.count_from(row + 1, &cand, &next_used);
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// Every admissible value-count vector for `row`, built one value at a time.
    /// `placed` is the number of cells already assigned values `< value + 1`
    /// and `prev_below` the number of cells of the row above holding values
    /// `< value + 1`.
    #[allow(clippy::too_many_arguments)]
    fn row_candidates(
        &self,
        row: usize,
        prev: &[u32],
        used: &[u32],
        value: usize,
        placed: u32,
        prev_below: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let len = self.outer[row] - self.inner[row];
        if value == self.content.len() {
            if placed == len {
                out.push(current.clone());
            }
            return;
        }
        let mut max = len - placed;
        max = max.min(self.content[value] - used[value]);
        if value > 0 {
            // Lattice: this row's copies of `value + 1` are read before its
            // copies of `value`.
            max = max.min(used[value - 1].saturating_sub(used[value]));
        }
        if row > 0 {
            // Column strictness: cells holding values <= value + 1 must sit
            // below cells of the row above that are inner or hold <= value.
            let limit = self.inner[row - 1] + prev_below;
            let start = self.inner[row] + placed;
            if limit < start {
                return;
            }
            max = max.min(limit - start);
        }
        let prev_here = if row > 0 { prev[value] } else { 0 };
        for c in 0..=max {
            current[value] = c;
            self.row_candidates(
                row,
                prev,
                used,
                value + 1,
                placed + c,
                prev_below + prev_here,
                current,
                out,
            );
        }
        current[value] = 0;
    }
}

/// A cache of LR coefficients and of restricted products, shared across
/// the many small calls made by multi-factor and quiver computations.
#[derive(Debug, Default)]
pub struct LrMemo {
    coefficients: HashMap<(Partition, Partition, Partition), BigUint>,
    products: HashMap<(Partition, Partition, Partition), Vec<(Partition, BigUint)>>,
}

impl LrMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lr(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
        let key = (lambda.clone(), mu.clone(), nu.clone());
        if let Some(hit) = self.coefficients.get(&key) {
            return hit.clone();
        }
        let value = lr_coefficient(lambda, mu, nu);
        self.coefficients.insert(key, value.clone());
        value
    }

    /// Nonzero terms of `s_μ · s_ν` restricted to partitions inside `bound`.
    pub fn product_within(
        &mut self,
        mu: &Partition,
        nu: &Partition,
        bound: &Partition,
    ) -> Vec<(Partition, BigUint)> {
        let key = (mu.clone(), nu.clone(), bound.clone());
        if let Some(hit) = self.products.get(&key) {
            return hit.clone();
        }
        let size = mu.size() + nu.size();
        let mut terms = Vec::new();
        if mu.is_contained_in(bound) && nu.is_contained_in(bound) {
            for kappa in partitions_between(mu, bound, size) {
                if !nu.is_contained_in(&kappa) {
                    continue;
                }
                let c = lr_coefficient(&kappa, mu, nu);
                if !c.is_zero() {
                    terms.push((kappa, c));
                }
            }
        }
        self.products.insert(key, terms.clone());
        terms
    }

    /// `c^γ_{λ(1),...,λ(m)}`, folding the factors left to right and keeping
    /// only intermediate shapes inside `γ`.
    pub fn multi_lr(&mut self, gamma: &Partition, factors: &[Partition]) -> BigUint {
        let Some((first, rest)) = factors.split_first() else {
            return BigUint::from(u8::from(gamma.is_empty()));
        };
        let total: u64 = factors.iter().map(Partition::size).sum();
        if total != gamma.size() || factors.iter().any(|f| !f.is_contained_in(gamma)) {
            return BigUint::zero();
        }
        let Some((last, middle)) = rest.split_last() else {
            return BigUint::from(u8::from(first == gamma));
        };

        let mut layer: Vec<(Partition, BigUint)> = vec![(first.clone(), BigUint::one())];
        for factor in middle {
            let mut next: HashMap<Partition, BigUint> = HashMap::new();
            for (shape, coeff) in &layer {
                for (kappa, c) in self.product_within(shape, factor, gamma) {
                    *next.entry(kappa).or_default() += coeff * c;
                }
            }
            layer = next.into_iter().collect();
            if layer.is_empty() {
                return BigUint::zero();
            }
        }
        layer
            .iter()
            .map(|(shape, coeff)| coeff * self.lr(gamma, shape, last))
            .sum()
    }

    pub fn cached_coefficients(&self) -> usize {
        self.coefficients.len()
    }
}

/// `c^γ_{λ(1),...,λ(m)}` with a fresh cache. A single factor gives `δ_{γ,λ(1)}`.
pub fn multi_lr_coefficient(gamma: &Partition, factors: &[Partition]) -> BigUint {
    LrMemo::new().multi_lr(gamma, factors)
}

/// Partitions `κ` with `lower ⊆ κ ⊆ upper` and `|κ| = size`, in
/// lexicographically decreasing order.
pub fn partitions_between(lower: &Partition, upper: &Partition, size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    if !lower.is_contained_in(upper) || size < lower.size() || size > upper.size() {
        return out;
    }
    let rows = upper.len();
    // Largest size still reachable from row i onward.
    let mut tail_max = vec![0u64; rows + 1];
    let mut tail_min = vec![0u64; rows + 1];
    for i in (0..rows).rev() {
        tail_max[i] = tail_max[i + 1] + upper.part(i) as u64;
        tail_min[i] = tail_min[i + 1] + lower.part(i) as u64;
    }
    let mut current = Vec::with_capacity(rows);
    between_rec(
        lower,
        upper,
        size,
        0,
        u32::MAX,
        &tail_max,
        &tail_min,
        &mut current,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn between_rec(
    lower: &Partition,
    upper: &Partition,
    remaining: u64,
    row: usize,
    cap: u32,
    tail_max: &[u64],
    tail_min: &[u64],
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if row >= lower.len() {
            out.push(Partition::new(current.clone()).expect("rows are weakly decreasing"));
        }
        return;
    }
    if row == upper.len() {
        return;
    }
    let hi = upper.part(row).min(cap);
    let lo = lower.part(row).max(1);
    for part in (lo..=hi).rev() {
        let part64 = part as u64;
        if part64 > remaining {
            continue;
        }
        let rest = remaining - part64;
        if rest > tail_max[row + 1] || rest < tail_min[row + 1] {
            continue;
        }
        current.push(part);
        between_rec(
            lower,
            upper,
            rest,
            row + 1,
            part,
            tail_max,
            tail_min,
            current,
            out,
        );
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn family_values() {
        assert_eq!(
            lr_coefficient(
                &partition![4, 3, 3, 2],
                &partition![3, 2, 1],
                &partition![3, 2, 1]
            ),
            BigUint::from(3u32)
        );
        assert_eq!(
            lr_coefficient(
                &partition![8, 6, 6, 4],
                &partition![6, 4, 2],
                &partition![6, 4, 2]
            ),
            BigUint::from(6u32)
        );
        assert_eq!(
            lr_coefficient(&partition![4, 2, 1], &partition![3, 1], &partition![2, 1]),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn trivial_and_vanishing_cases() {
        let lam = partition![5, 3, 1];
        assert_eq!(
            lr_coefficient(&lam, &lam, &Partition::empty()),
            BigUint::one()
        );
        assert_eq!(
            lr_coefficient(&lam, &Partition::empty(), &lam),
            BigUint::one()
        );
        assert!(lr_coefficient(&lam, &partition![3], &partition![3]).is_zero());
        assert!(lr_coefficient(&partition![2, 1], &partition![3], &Partition::empty()).is_zero());
        assert_eq!(
            lr_coefficient(
                &Partition::empty(),
                &Partition::empty(),
                &Partition::empty()
            ),
            BigUint::one()
        );
    }

    #[test]
    fn classic_coefficient_two() {
        // s_{21} s_{21} contains s_{321} twice.
        assert_eq!(
            lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn multi_lr_examples() {
        let box1 = partition![1];
        let four = vec![box1.clone(); 4];
        assert_eq!(
            multi_lr_coefficient(&partition![2, 1, 1], &four),
            BigUint::from(3u32)
        );
        assert_eq!(
            multi_lr_coefficient(&partition![2], &[box1.clone(), box1.clone()]),
            BigUint::one()
        );
        assert_eq!(
            multi_lr_coefficient(&partition![1, 1, 1], &four[..3]),
            BigUint::one()
        );
    }

    #[test]
    fn multi_lr_degenerate_lengths() {
        let g = partition![3, 1];
        assert_eq!(
            multi_lr_coefficient(&g, std::slice::from_ref(&g)),
            BigUint::one()
        );
        assert!(multi_lr_coefficient(&g, &[partition![4]]).is_zero());
        assert!(multi_lr_coefficient(&g, &[]).is_zero());
        assert_eq!(
            multi_lr_coefficient(&Partition::empty(), &[]),
            BigUint::one()
        );
        assert_eq!(
            multi_lr_coefficient(&partition![3, 2, 1], &[partition![2, 1], partition![2, 1]]),
            lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1])
        );
    }

    #[test]
    fn partitions_between_box() {
        let all = partitions_between(&Partition::empty(), &partition![2, 2], 2);
        assert_eq!(all, vec![partition![2], partition![1, 1]]);
        let all = partitions_between(&partition![1], &partition![3, 3, 3], 4);
        assert_eq!(
            all,
            vec![partition![3, 1], partition![2, 2], partition![2, 1, 1]]
        );
        assert!(partitions_between(&partition![2], &partition![1, 1], 2).is_empty());
        assert_eq!(
            partitions_between(&Partition::empty(), &Partition::empty(), 0),
            vec![Partition::empty()]
        );
    }
}
