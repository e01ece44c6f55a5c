use std::fmt;

use crate::partition::{Partition, SkewShape};

/// True iff every prefix has at least as many `i` as `i + 1`, for all `i`.
pub fn is_lattice_word(word: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v >= 2 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// A row-wise filling of a skew shape. `rows[i]` lists row `i` left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LrFilling {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl LrFilling {
    /// Does not validate; see [`is_lr_filling`].
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        LrFilling { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows right to left, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Row words concatenated, the key for the enumeration order.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Number of occurrences of each value `1..`.
    pub fn content(&self) -> Vec<u32> {
        let mut counts: Vec<u32> = Vec::new();
        for &v in self.rows.iter().flatten() {
            if v == 0 {
                continue;
            }
            if counts.len() < v as usize {
                counts.resize(v as usize, 0);
            }
            counts[v as usize - 1] += 1;
        }
        counts
    }

    /// Entry at absolute column `col` of row `row`, if that cell is in the skew shape.
    pub fn entry(&self, row: usize, col: u32) -> Option<u32> {
        let start = self.shape.row_start(row);
        if col < start {
            return None;
        }
        self.rows.get(row)?.get((col - start) as usize).copied()
    }
}

/// Skew diagram with `.` for cells of the inner shape.
impl fmt::Display for LrFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = (0..self.shape.row_start(i))
                .map(|_| format!("{:>width$}", "."))
                .collect();
            cells.extend(row.iter().map(|v| format!("{v:>width$}")));
            writeln!(f, "{}", cells.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// Semistandard, lattice, and with `content[i]` copies of `i + 1`.
pub fn is_lr_filling(filling: &LrFilling, content: &Partition) -> bool {
    let shape = filling.shape();
    if filling.rows.len() != shape.rows() {
        return false;
    }
    for (i, row) in filling.rows.iter().enumerate() {
        if row.len() != shape.row_len(i) {
            return false;
        }
        if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if i > 0 {
            let start = shape.row_start(i);
            for (k, &v) in row.iter().enumerate() {
                if let Some(above) = filling.entry(i - 1, start + k as u32) {
                    if above >= v {
                        return false;
                    }
                }
            }
        }
    }
    filling.content() == content.parts() && is_lattice_word(&filling.reading_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn example_shape() -> SkewShape {
        SkewShape::new(partition![4, 2, 1], partition![3, 1]).unwrap()
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice_word(&[1, 2, 1, 1, 2, 3]));
        assert!(is_lattice_word(&[]));
        assert!(!is_lattice_word(&[2, 1, 1]));
        assert!(!is_lattice_word(&[1, 2, 2]));
        assert!(!is_lattice_word(&[1, 3]));
    }

    #[test]
    fn small_example_fillings() {
        let content = partition![2, 1];
        let good = LrFilling::new(example_shape(), vec![vec![1], vec![1], vec![2]]);
        assert!(is_lr_filling(&good, &content));
        let also_good = LrFilling::new(example_shape(), vec![vec![1], vec![2], vec![1]]);
        assert!(is_lr_filling(&also_good, &content));
        let not_lattice = LrFilling::new(example_shape(), vec![vec![2], vec![1], vec![1]]);
        assert!(!is_lr_filling(&not_lattice, &content));
    }

    #[test]
    fn empty_filling() {
        let shape = SkewShape::new(Partition::empty(), Partition::empty()).unwrap();
        assert!(is_lr_filling(
            &LrFilling::new(shape, vec![]),
            &Partition::empty()
        ));
    }

    #[test]
    fn rejects_column_and_shape_violations() {
        let shape = SkewShape::new(partition![2, 2], Partition::empty()).unwrap();
        let bad_column = LrFilling::new(shape.clone(), vec![vec![1, 1], vec![1, 2]]);
        assert!(!is_lr_filling(&bad_column, &partition![3, 1]));
        let wrong_len = LrFilling::new(shape.clone(), vec![vec![1, 1], vec![2]]);
        assert!(!is_lr_filling(&wrong_len, &partition![2, 1]));
        let ok = LrFilling::new(shape, vec![vec![1, 1], vec![2, 2]]);
        assert!(is_lr_filling(&ok, &partition![2, 2]));
        assert!(!is_lr_filling(&ok, &partition![2, 1, 1]));
    }

    #[test]
    fn renders_skew_diagram() {
        let f = LrFilling::new(example_shape(), vec![vec![1], vec![1], vec![2]]);
        assert_eq!(f.to_string(), ". . . 1\n. 1\n2\n");
    }
}
