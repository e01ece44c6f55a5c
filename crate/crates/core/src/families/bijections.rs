//! Explicit LR tableaux indexed by monomials.
//!
//! `E(a)` realizes `c^{(4n,4n,3n,n)}_{(3n,2n,n),(3n,2n,n)} = binom(n+2,2)` by
//! degree-`n` monomials in three variables, and `D(a)` realizes
//! `c^{(4n,4n,4n,4n,3n,3n,n,n)}_{σ,σ} = binom(n+5,5)` with
//! `σ = (3n,3n,2n,2n,n,n)` by degree-`n` monomials in six variables.

use crate::error::{Error, Result};
use crate::lr::{is_lr_filling, LrFilling};
use crate::partition::{Partition, SkewShape};

/// Column types of the last two rows of `D(a)`, in the order the exponents
/// `a` refer to them.
pub const D_COLUMN_TYPES: [(u32, u32); 6] = [(1, 2), (2, 4), (2, 6), (3, 4), (4, 6), (5, 6)];

/// Weak compositions of `total` into `parts` parts, in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    compositions_rec(total, parts, &mut current, &mut out);
    out
}

fn compositions_rec(left: u32, parts: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if current.len() + 1 == parts {
        current.push(left);
        out.push(current.clone());
        current.pop();
        return;
    }
    if parts == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for x in 0..=left {
        current.push(x);
        compositions_rec(left - x, parts, current, out);
        current.pop();
    }
}

fn check_sum(n: u32, a: &[u32]) -> Result<()> {
    let got: u32 = a.iter().sum();
    if got != n {
        return Err(Error::ExponentSum { expected: n, got });
    }
    Ok(())
}

fn repeat(value: u32, times: u32) -> impl Iterator<Item = u32> {
    std::iter::repeat_n(value, times as usize)
}

/// `(4n,4n,3n,n) / (3n,2n,n)`.
pub fn e_shape(n: u32) -> SkewShape {
    SkewShape::new(
        Partition::new(vec![4 * n, 4 * n, 3 * n, n]).expect("decreasing"),
        Partition::new(vec![3 * n, 2 * n, n]).expect("decreasing"),
    )
    .expect("contained")
}

/// `(4n,4n,4n,4n,3n,3n,n,n) / (3n,3n,2n,2n,n,n)`.
pub fn d_shape(n: u32) -> SkewShape {
    SkewShape::new(
        Partition::new(vec![4 * n, 4 * n, 4 * n, 4 * n, 3 * n, 3 * n, n, n]).expect("decreasing"),
        Partition::new(vec![3 * n, 3 * n, 2 * n, 2 * n, n, n]).expect("decreasing"),
    )
    .expect("contained")
}

/// The tableau `E(a)` for `a = (a1, a2, a3)` with `a1 + a2 + a3 = n`.
///
/// The last row holds `a_i` copies of `i`; the third row takes what is left.
pub fn construct_e(n: u32, a: [u32; 3]) -> Result<LrFilling> {
    check_sum(n, &a)?;
    let rows = vec![
        repeat(1, n).collect(),
        repeat(1, n).chain(repeat(2, n)).collect(),
        repeat(1, n - a[0])
            .chain(repeat(2, n - a[1]))
            .chain(repeat(3, n - a[2]))
            .collect(),
        repeat(1, a[0])
            .chain(repeat(2, a[1]))
            .chain(repeat(3, a[2]))
            .collect(),
    ];
    let filling = LrFilling::new(e_shape(n), rows);
    let content = Partition::new(vec![3 * n, 2 * n, n]).expect("decreasing");
    if !is_lr_filling(&filling, &content) {
        return Err(Error::InvalidConstruction);
    }
    Ok(filling)
}

/// Reads `a` back from the last row of a tableau in `LR(E-shape)`.
pub fn e_exponents(filling: &LrFilling) -> [u32; 3] {
    let mut out = [0u32; 3];
    if let Some(last) = filling.rows().last() {
        for &v in last {
            if (1..=3).contains(&v) {
                out[v as usize - 1] += 1;
            }
        }
    }
    out
}

fn d_fixed_rows(n: u32) -> [Vec<u32>; 4] {
    [
        repeat(1, n).collect(),
        repeat(2, n).collect(),
        repeat(1, n).chain(repeat(3, n)).collect(),
        repeat(2, n).chain(repeat(4, n)).collect(),
    ]
}

fn d_bottom_rows(a: &[u32; 6]) -> (Vec<u32>, Vec<u32>) {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (&(i, j), &k) in D_COLUMN_TYPES.iter().zip(a) {
        top.extend(repeat(i, k));
        bottom.extend(repeat(j, k));
    }
    top.sort_unstable();
    bottom.sort_unstable();
    (top, bottom)
}

/// The tableau `D(a)` for exponents `a = (a12, a24, a26, a34, a46, a56)`
/// with sum `n`.
///
/// The bottom two rows hold `a_ij` columns `(i | j)`, each row sorted, which
/// turns every `(3|4), (2|6)` clash into `(2,3 | 4,6)`. Rows five and six
/// take the leftover values: 1s then 3s then 5s above, 6s under the 5s.
pub fn construct_d(n: u32, a: [u32; 6]) -> Result<LrFilling> {
    check_sum(n, &a)?;
    let [r1, r2, r3, r4] = d_fixed_rows(n);
    let (row7, row8) = d_bottom_rows(&a);
    let mut left = [n; 6];
    for &v in row7.iter().chain(&row8) {
        left[v as usize - 1] -= 1;
    }
    let [l1, l2, l3, l4, l5, l6] = left;
    let threes_above = (2 * n)
        .checked_sub(l1 + l6)
        .ok_or(Error::InvalidConstruction)?;
    let threes_below = l3
        .checked_sub(threes_above)
        .ok_or(Error::InvalidConstruction)?;
    let fives_below = l5.checked_sub(l6).ok_or(Error::InvalidConstruction)?;
    let row5 = repeat(1, l1)
        .chain(repeat(3, threes_above))
        .chain(repeat(5, l6))
        .collect();
    let row6 = repeat(2, l2)
        .chain(repeat(3, threes_below))
        .chain(repeat(4, l4))
        .chain(repeat(5, fives_below))
        .chain(repeat(6, l6))
        .collect();
    let filling = LrFilling::new(d_shape(n), vec![r1, r2, r3, r4, row5, row6, row7, row8]);
    if !is_lr_filling(&filling, &d_content(n)) {
        return Err(Error::InvalidConstruction);
    }
    Ok(filling)
}

fn d_content(n: u32) -> Partition {
    Partition::new(vec![3 * n, 3 * n, 2 * n, 2 * n, n, n]).expect("decreasing")
}

/// Every way to fill rows five and six of the `D` shape, given the fixed
/// first four rows and the bottom rows of `D(a)`, that yields an LR filling.
/// Used to confirm that the completion in [`construct_d`] is forced.
pub fn complete_rows_5_6(n: u32, a: [u32; 6]) -> Result<Vec<LrFilling>> {
    check_sum(n, &a)?;
    let [r1, r2, r3, r4] = d_fixed_rows(n);
    let (row7, row8) = d_bottom_rows(&a);
    let mut left = [n; 6];
    for &v in row7.iter().chain(&row8) {
        left[v as usize - 1] -= 1;
    }
    let content = d_content(n);
    let shape = d_shape(n);
    let mut out = Vec::new();
    let mut pick = [0u32; 6];
    sub_multisets(&left, 2 * n, 0, &mut pick, &mut |upper| {
        let row5: Vec<u32> = (0..6)
            .flat_map(|v| repeat(v as u32 + 1, upper[v]))
            .collect();
        let row6: Vec<u32> = (0..6)
            .flat_map(|v| repeat(v as u32 + 1, left[v] - upper[v]))
            .collect();
        let filling = LrFilling::new(
            shape.clone(),
            vec![
                r1.clone(),
                r2.clone(),
                r3.clone(),
                r4.clone(),
                row5,
                row6,
                row7.clone(),
                row8.clone(),
            ],
        );
        if is_lr_filling(&filling, &content) {
            out.push(filling);
        }
    });
    Ok(out)
}

fn sub_multisets(
    avail: &[u32; 6],
    size: u32,
    value: usize,
    pick: &mut [u32; 6],
    visit: &mut dyn FnMut(&[u32; 6]),
) {
    if value == 6 {
        if size == 0 {
            visit(pick);
        }
        return;
    }
    for k in 0..=avail[value].min(size) {
        pick[value] = k;
        sub_multisets(avail, size - k, value + 1, pick, visit);
    }
    pick[value] = 0;
}
