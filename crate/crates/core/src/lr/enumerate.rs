//! Cell-by-cell backtracking over all fillings of a skew shape.
//!
//! This is the reference route for LR coefficients: it materializes every
//! filling and shares no state or recursion with the row counter in
//! [`super::count`].

use crate::partition::{Partition, SkewShape};

use super::filling::LrFilling;

/// All LR fillings of `shape` with the given content, ordered
/// lexicographically by their concatenated row words.
///
/// Returns an empty vector when the box count does not match `|content|`.
pub fn enumerate_lr_fillings(shape: &SkewShape, content: &Partition) -> Vec<LrFilling> {
    let mut out = Vec::new();
    visit_lr_fillings(shape, content, |rows| {
        out.push(LrFilling::new(shape.clone(), rows.to_vec()));
        true
    });
    out
}

/// Number of LR fillings, counted by full enumeration.
pub fn count_by_enumeration(shape: &SkewShape, content: &Partition) -> u64 {
    let mut n = 0u64;
    visit_lr_fillings(shape, content, |_| {
        n += 1;
        true
    });
    n
}

/// Calls `visit` on each filling in order; stop early by returning `false`.
pub fn visit_lr_fillings<F>(shape: &SkewShape, content: &Partition, mut visit: F)
where
    F: FnMut(&[Vec<u32>]) -> bool,
{
    if shape.boxes() != content.size() {
        return;
    }
    let mut search = Search {
        shape,
        content: content.parts(),
        remaining: content.parts().to_vec(),
        read: vec![0; content.len()],
        rows: shape
            .row_lengths()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect(),
    };
    search.fill(0, &mut visit);
}

struct Search<'a> {
    shape: &'a SkewShape,
    content: &'a [u32],
    remaining: Vec<u32>,
    /// Letter counts of the reading word over completed rows.
    read: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Search<'_> {
    /// Returns `false` once the visitor asked to stop.
    fn fill<F>(&mut self, row: usize, visit: &mut F) -> bool
    where
        F: FnMut(&[Vec<u32>]) -> bool,
    {
        if row == self.rows.len() {
            return visit(&self.rows);
        }
        let len = self.shape.row_len(row);
        if self.rows[row].len() == len {
            if !self.read_row(row) {
                self.unread_row(row);
                return true;
            }
            let keep_going = self.fill(row + 1, visit);
            self.unread_row(row);
            return keep_going;
        }

        let col = self.shape.row_start(row) + self.rows[row].len() as u32;
        let left = self.rows[row].last().copied().unwrap_or(1);
        let above = if row > 0 {
            self.cell(row - 1, col)
        } else {
            None
        };
        let lo = left.max(above.map_or(1, |a| a + 1));
        for v in lo..=self.content.len() as u32 {
            let idx = v as usize - 1;
            if self.remaining[idx] == 0 {
                continue;
            }
            self.remaining[idx] -= 1;
            self.rows[row].push(v);
            let keep_going = self.fill(row, visit);
            self.rows[row].pop();
            self.remaining[idx] += 1;
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn cell(&self, row: usize, col: u32) -> Option<u32> {
        let start = self.shape.row_start(row);
        if col < start {
            return None;
        }
        self.rows[row].get((col - start) as usize).copied()
    }

    /// Appends the completed row (right to left) to the reading word and
    /// checks the lattice condition on every new prefix.
    fn read_row(&mut self, row: usize) -> bool {
        let mut ok = true;
        for &v in self.rows[row].iter().rev() {
            let idx = v as usize - 1;
            self.read[idx] += 1;
            if idx > 0 && self.read[idx] > self.read[idx - 1] {
                ok = false;
            }
        }
        ok
    }

    fn unread_row(&mut self, row: usize) {
        for &v in &self.rows[row] {
            self.read[v as usize - 1] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::filling::is_lr_filling;
    use crate::partition;

    #[test]
    fn small_example_has_two_fillings() {
        let shape = SkewShape::new(partition![4, 2, 1], partition![3, 1]).unwrap();
        let content = partition![2, 1];
        let all = enumerate_lr_fillings(&shape, &content);
        let rows: Vec<_> = all.iter().map(|f| f.rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![vec![1], vec![1], vec![2]],
                vec![vec![1], vec![2], vec![1]]
            ]
        );
        assert!(all.iter().all(|f| is_lr_filling(f, &content)));
    }

    #[test]
    fn reversed_roles_example() {
        // c^{(4,2,1)}_{(2,1),(3,1)}: the two fillings with content (3,1).
        let shape = SkewShape::new(partition![4, 2, 1], partition![2, 1]).unwrap();
        let rows: Vec<_> = enumerate_lr_fillings(&shape, &partition![3, 1])
            .iter()
            .map(|f| f.rows().to_vec())
            .collect();
        assert_eq!(
            rows,
            vec![
                vec![vec![1, 1], vec![1], vec![2]],
                vec![vec![1, 1], vec![2], vec![1]]
            ]
        );
    }

    #[test]
    fn conjugate_family_counts() {
        let shape = SkewShape::new(partition![4, 4, 3, 1], partition![3, 2, 1]).unwrap();
        assert_eq!(enumerate_lr_fillings(&shape, &partition![3, 2, 1]).len(), 3);
        let shape = SkewShape::new(partition![8, 8, 6, 2], partition![6, 4, 2]).unwrap();
        assert_eq!(enumerate_lr_fillings(&shape, &partition![6, 4, 2]).len(), 6);
    }

    #[test]
    fn size_mismatch_is_empty_not_error() {
        let shape = SkewShape::new(partition![3, 1], partition![1]).unwrap();
        assert!(enumerate_lr_fillings(&shape, &partition![2]).is_empty());
    }

    #[test]
    fn empty_shape_has_one_filling() {
        let lam = partition![3, 2];
        let shape = SkewShape::new(lam.clone(), lam).unwrap();
        assert_eq!(enumerate_lr_fillings(&shape, &Partition::empty()).len(), 1);
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let shape = SkewShape::new(partition![5, 4, 3, 2], partition![3, 2, 1]).unwrap();
        let content = partition![3, 2, 2, 1];
        let words: Vec<_> = enumerate_lr_fillings(&shape, &content)
            .iter()
            .map(|f| f.row_word())
            .collect();
        assert!(!words.is_empty());
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }
}
