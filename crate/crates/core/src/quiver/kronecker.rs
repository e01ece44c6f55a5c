//! Semi-invariant dimensions for the generalized Kronecker quiver `θ(l)`.
//!
//! Cauchy's formula splits `C[Rep(θ(l), (b1, b2))]` into
//! `⊗_i S^{μ(i)}W ⊗ S^{μ(i)}V*`, so the weight space `(−a, b)` has dimension
//! `Σ_μ c^{(a^{b1})}_{μ(1..l)} · c^{(b^{b2})}_{μ(1..l)}`. Nothing is
//! materialized beyond multi-LR coefficients.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::lr::LrMemo;
use crate::partition::Partition;

/// All partitions with at most `height` parts, each at most `width`.
pub fn rectangle_partitions(width: u32, height: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    rect_rec(width, height as usize, &mut current, &mut out);
    out
}

fn rect_rec(cap: u32, rows_left: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::new(current.clone()).expect("weakly decreasing"));
    if rows_left == 0 {
        return;
    }
    for part in 1..=cap {
        current.push(part);
        rect_rec(part, rows_left - 1, current, out);
        current.pop();
    }
}

/// `dim SI(θ(l), (n, n))_{(−m, m)} = Σ (c^{(n^m)}_{λ(1),...,λ(l)})²`, the sum
/// running over `l`-tuples of partitions inside the `m × n` box with total
/// size `nm`. `m = 0` (or `n = 0`) gives 1.
pub fn kronecker_si_dim(l: u32, n: u32, m: u32) -> BigUint {
    let target = Partition::rectangle(n, m);
    let pool = rectangle_partitions(n, m);
    sum_over_tuples(&pool, l as usize, target.size(), |memo, tuple| {
        let c = memo.multi_lr(&target, tuple);
        &c * &c
    })
}

/// `dim SI(θ(l), (b1, b2))_σ` for a weight `σ = (σ1, σ2)`.
///
/// Weights with `σ1 > 0`, `σ2 < 0` or `σ(β) ≠ 0` have no semi-invariants
/// and return 0.
pub fn kronecker_si_dim_general(l: u32, beta: (u32, u32), sigma: (i64, i64)) -> BigUint {
    let (b1, b2) = beta;
    let (s1, s2) = sigma;
    if s1 > 0 || s2 < 0 || s1 * b1 as i64 + s2 * b2 as i64 != 0 {
        return BigUint::zero();
    }
    let (a, b) = ((-s1) as u32, s2 as u32);
    let left = Partition::rectangle(a, b1);
    let right = Partition::rectangle(b, b2);
    let pool = rectangle_partitions(a.min(b), b1.min(b2));
    sum_over_tuples(&pool, l as usize, left.size(), |memo, tuple| {
        let x = memo.multi_lr(&left, tuple);
        if x.is_zero() {
            return x;
        }
        x * memo.multi_lr(&right, tuple)
    })
}

/// `Σ term(t)` over `len`-tuples `t` drawn from `pool` with `Σ |t_i| = total`.
fn sum_over_tuples<F>(pool: &[Partition], len: usize, total: u64, term: F) -> BigUint
where
    F: Fn(&mut LrMemo, &[Partition]) -> BigUint + Sync,
{
    if len == 0 {
        return BigUint::from(u8::from(total == 0));
    }
    let max_size = pool.iter().map(Partition::size).max().unwrap_or(0);
    let mut by_size: Vec<Vec<Partition>> = vec![Vec::new(); max_size as usize + 1];
    for p in pool {
        by_size[p.size() as usize].push(p.clone());
    }
    let firsts: Vec<&Partition> = pool
        .iter()
        .filter(|p| {
            let rest = total.checked_sub(p.size());
            rest.is_some_and(|r| r <= (len as u64 - 1) * max_size)
        })
        .collect();

    let run_one = |memo: &mut LrMemo, first: &Partition| {
        let mut acc = BigUint::zero();
        let mut tuple = vec![first.clone()];
        fill_tuple(
            &by_size,
            len,
            total - first.size(),
            max_size,
            &mut tuple,
            memo,
            &term,
            &mut acc,
        );
        acc
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        firsts
            .par_iter()
            .map_init(LrMemo::new, |memo, first| run_one(memo, first))
            .reduce(BigUint::zero, |a, b| a + b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut memo = LrMemo::new();
        firsts.iter().map(|first| run_one(&mut memo, first)).sum()
    }
}

#[allow(clippy::too_many_arguments)]
fn fill_tuple<F>(
    by_size: &[Vec<Partition>],
    len: usize,
    remaining: u64,
    max_size: u64,
    tuple: &mut Vec<Partition>,
    memo: &mut LrMemo,
    term: &F,
    acc: &mut BigUint,
) where
    F: Fn(&mut LrMemo, &[Partition]) -> BigUint,
{
    let slots = len - tuple.len();
    if slots == 0 {
        if remaining == 0 {
            *acc += term(memo, tuple);
        }
        return;
    }
    if remaining > slots as u64 * max_size {
        return;
    }
    let sizes: Vec<u64> = if slots == 1 {
        vec![remaining]
    } else {
        (0..=remaining.min(max_size)).collect()
    };
    for s in sizes {
        let Some(choices) = by_size.get(s as usize) else {
            continue;
        };
        for p in choices {
            tuple.push(p.clone());
            fill_tuple(
                by_size,
                len,
                remaining - s,
                max_size,
                tuple,
                memo,
                term,
                acc,
            );
            tuple.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> BigUint {
        (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn box_partitions() {
        assert_eq!(rectangle_partitions(2, 2).len(), 6);
        assert_eq!(rectangle_partitions(21, 2).len(), 253);
        assert_eq!(rectangle_partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(rectangle_partitions(3, 0), vec![Partition::empty()]);
    }

    #[test]
    fn small_values() {
        assert_eq!(kronecker_si_dim(3, 1, 1), BigUint::from(3u32));
        assert_eq!(kronecker_si_dim(3, 2, 1), BigUint::from(6u32));
        assert_eq!(kronecker_si_dim(3, 1, 2), BigUint::from(6u32));
        assert_eq!(kronecker_si_dim(3, 2, 2), BigUint::from(21u32));
        assert_eq!(kronecker_si_dim(3, 5, 0), BigUint::from(1u32));
        assert_eq!(kronecker_si_dim(3, 0, 4), BigUint::from(1u32));
    }

    #[test]
    fn one_row_closed_form() {
        for n in 0..=12u64 {
            assert_eq!(
                kronecker_si_dim(3, n as u32, 1),
                binomial(n + 2, 2),
                "n = {n}"
            );
        }
    }

    #[test]
    fn general_examples() {
        assert_eq!(
            kronecker_si_dim_general(3, (1, 2), (-2, 1)),
            BigUint::from(3u32)
        );
        assert_eq!(
            kronecker_si_dim_general(3, (2, 2), (-1, 1)),
            BigUint::from(6u32)
        );
        assert_eq!(
            kronecker_si_dim_general(2, (3, 3), (0, 0)),
            BigUint::from(1u32)
        );
        assert_eq!(
            kronecker_si_dim_general(5, (0, 0), (0, 0)),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn general_out_of_contract_weights() {
        assert!(kronecker_si_dim_general(3, (1, 1), (1, -1)).is_zero());
        assert!(kronecker_si_dim_general(3, (1, 1), (-1, 2)).is_zero());
    }

    #[test]
    fn general_matches_square_sum_on_diagonal() {
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            assert_eq!(
                kronecker_si_dim_general(3, (n, n), (-(m as i64), m as i64)),
                kronecker_si_dim(3, n, m),
                "(n, m) = ({n}, {m})"
            );
        }
    }

    #[test]
    fn single_arrow_is_one_dimensional() {
        // θ(1) = A2: SI(A2, (n, n))_{(−m, m)} is spanned by det^m.
        for n in 1..4 {
            for m in 0..4 {
                assert_eq!(kronecker_si_dim(1, n, m), BigUint::from(1u32));
            }
        }
    }
}
