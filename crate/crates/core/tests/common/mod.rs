//! Oracles and generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use lrcex::lr::count_by_enumeration;
use lrcex::{BigUint, Partition, SkewShape};
use rand::Rng;

/// All partitions of `size` with at most `max_parts` parts, each at most `max_part`.
pub fn partitions_of(size: u32, max_parts: usize, max_part: u32) -> Vec<Partition> {
    fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_part, max_parts, &mut Vec::new(), &mut out);
    out
}

/// `c^λ_{μ,ν}` by listing every LR filling of `λ/μ` with content `ν`.
pub fn lr_by_enumeration(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if !mu.is_contained_in(lambda) || lambda.size() != mu.size() + nu.size() {
        return BigUint::from(0u8);
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
    BigUint::from(count_by_enumeration(&shape, nu))
}

/// `c^γ_{μ1,...,μk}` as `Σ_ν c^ν_{μ1..μ(k−1)} c^γ_{ν,μk}`, each two-factor
/// coefficient counted by enumeration.
pub fn multi_lr_by_enumeration(gamma: &Partition, factors: &[Partition]) -> BigUint {
    match factors {
        [] => BigUint::from(u8::from(gamma.is_empty())),
        [only] => BigUint::from(u8::from(only == gamma)),
        [rest @ .., last] => {
            let Some(size) = gamma.size().checked_sub(last.size()) else {
                return BigUint::from(0u8);
            };
            let mut total = BigUint::from(0u8);
            for nu in partitions_of(size as u32, gamma.len(), gamma.part(0)) {
                if !nu.is_contained_in(gamma) {
                    continue;
                }
                let inner = multi_lr_by_enumeration(&nu, rest);
                if inner != BigUint::from(0u8) {
                    total += inner * lr_by_enumeration(gamma, &nu, last);
                }
            }
            total
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    // Pascal's rule, row by row.
    let mut row = vec![BigUint::from(1u8)];
    for _ in 0..n {
        let mut next = vec![BigUint::from(1u8)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::from(1u8));
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

/// A random partition of exactly `size`.
pub fn random_partition<R: Rng>(rng: &mut R, size: u32) -> Partition {
    let mut parts = Vec::new();
    let mut left = size;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// A random `μ ⊆ λ` obtained by deleting removable corners.
pub fn random_subpartition<R: Rng>(rng: &mut R, lambda: &Partition) -> Partition {
    let mut parts = lambda.parts().to_vec();
    let removals = rng.gen_range(0..=lambda.size());
    for _ in 0..removals {
        let corners: Vec<usize> = (0..parts.len())
            .filter(|&i| parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]))
            .collect();
        if corners.is_empty() {
            break;
        }
        let i = corners[rng.gen_range(0..corners.len())];
        parts[i] -= 1;
    }
    Partition::new(parts).unwrap()
}

/// `(λ, μ, ν)` with `|λ| ≤ max_size`, `μ ⊆ λ` and `|ν| = |λ| − |μ|`.
pub fn random_triple<R: Rng>(rng: &mut R, max_size: u32) -> (Partition, Partition, Partition) {
    let size = rng.gen_range(0..=max_size);
    let lambda = random_partition(rng, size);
    let mu = random_subpartition(rng, &lambda);
    let nu = random_partition(rng, (lambda.size() - mu.size()) as u32);
    (lambda, mu, nu)
}
