//! Two-row Horn inequalities for `c^{(n,n)}_{λ(1),λ(2),λ(3)}`.
//!
//! For three partitions with at most two parts the coefficient is nonzero
//! exactly when
//!
//! * `|λ(1)| + |λ(2)| + |λ(3)| = 2n`, and
//! * `n − λ_1(i) − λ_2(j) − λ_2(k) ≥ 0` for `{i, j, k} = {1, 2, 3}`.
//!
//! The solutions are in bijection with degree-`n` monomials in six
//! variables via [`horn_monomial`].

use num_bigint::BigUint;

use crate::partition::Partition;

/// Partitions with at most two parts, each at most `n`.
pub fn two_row_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for first in 0..=n {
        for second in 0..=first {
            out.push(Partition::new(vec![first, second]).expect("decreasing"));
        }
    }
    out
}

pub fn horn_nonvanishing_two_rows(n: u32, triple: &[Partition; 3]) -> bool {
    if triple.iter().any(|p| p.len() > 2 || p.part(0) > n) {
        return false;
    }
    let size: u64 = triple.iter().map(Partition::size).sum();
    if size != 2 * n as u64 {
        return false;
    }
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let used = triple[i].part(0) as i64 + triple[j].part(1) as i64 + triple[k].part(1) as i64;
        n as i64 - used >= 0
    })
}

/// `(n1, ..., n6)` with `n_{2i−1} = n − λ_1(i) − λ_2(j) − λ_2(k)` and
/// `n_{2i} = λ_2(i)`. Only meaningful for triples passing
/// [`horn_nonvanishing_two_rows`].
pub fn horn_monomial(n: u32, triple: &[Partition; 3]) -> [u32; 6] {
    let mut out = [0u32; 6];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        out[2 * i] = n - triple[i].part(0) - triple[j].part(1) - triple[k].part(1);
        out[2 * i + 1] = triple[i].part(1);
    }
    out
}

/// Inverse of [`horn_monomial`] for exponents summing to `n`.
pub fn triple_from_monomial(n: u32, exps: &[u32; 6]) -> [Partition; 3] {
    let seconds = [exps[1], exps[3], exps[5]];
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let first = n - exps[2 * i] - seconds[j] - seconds[k];
        Partition::new(vec![first, seconds[i]]).expect("monomial gives a partition")
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornTriple {
    pub triple: [Partition; 3],
    pub monomial: [u32; 6],
}

/// Every triple satisfying the two-row Horn inequalities for `(n,n)`.
pub fn horn_triples(n: u32) -> Vec<HornTriple> {
    let pool = two_row_partitions(n);
    let mut by_size: Vec<Vec<&Partition>> = vec![Vec::new(); 2 * n as usize + 1];
    for p in &pool {
        by_size[p.size() as usize].push(p);
    }
    let target = 2 * n as u64;
    let mut out = Vec::new();
    for a in &pool {
        for b in &pool {
            let Some(rest) = target.checked_sub(a.size() + b.size()) else {
                continue;
            };
            let Some(cs) = by_size.get(rest as usize) else {
                continue;
            };
            for &c in cs {
                let triple = [a.clone(), b.clone(), c.clone()];
                if horn_nonvanishing_two_rows(n, &triple) {
                    let monomial = horn_monomial(n, &triple);
                    out.push(HornTriple { triple, monomial });
                }
            }
        }
    }
    out
}

/// `|S|`, the number of triples passing the Horn inequalities; equals
/// `dim SI(θ(3), (n,n))_{(−2,2)}` because each such coefficient is 1.
pub fn horn_count_two_rows(n: u32) -> BigUint {
    let pool = two_row_partitions(n);
    let mut by_size: Vec<Vec<&Partition>> = vec![Vec::new(); 2 * n as usize + 1];
    for p in &pool {
        by_size[p.size() as usize].push(p);
    }
    let target = 2 * n as u64;
    let mut count: u64 = 0;
    for a in &pool {
        for b in &pool {
            let Some(rest) = target.checked_sub(a.size() + b.size()) else {
                continue;
            };
            if let Some(cs) = by_size.get(rest as usize) {
                count += cs
                    .iter()
                    .filter(|&&c| horn_nonvanishing_two_rows(n, &[a.clone(), b.clone(), c.clone()]))
                    .count() as u64;
            }
        }
    }
    BigUint::from(count)
}
