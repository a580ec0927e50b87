//! Partitions, skew shapes, row flags, and the cell order used by the fill
//! recurrences: cells are taken column by column from the right, top to
//! bottom within a column.
//!
//! Skew shapes keep raw part vectors so that non-partition input stays
//! representable (it is needed by one of the counterexamples); validity is a
//! predicate, and enumeration downstream treats invalid shapes as empty.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// True iff the parts are weakly decreasing.
pub fn is_weakly_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// A partition: weakly decreasing parts with explicit length, trailing zeros
/// allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(is_weakly_decreasing(&parts), "parts must be weakly decreasing: {parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Same partition with the length extended to n by trailing zeros.
    pub fn padded(&self, n: usize) -> Partition {
        assert!(n >= self.parts.len(), "cannot shrink a partition by padding");
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Partition { parts }
    }

    /// Conjugate partition, with natural length (the largest part).
    pub fn transpose(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        self.transpose_with_len(max)
    }

    /// Conjugate partition padded (or validly truncated) to length n.
    pub fn transpose_with_len(&self, n: usize) -> Partition {
        let mut parts = Vec::with_capacity(n);
        for j in 1..=n as u32 {
            parts.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        if let Some(&largest) = self.parts.first() {
            assert!(largest as usize <= n, "transpose length {n} drops nonzero parts");
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Parses a comma-separated part list like "8,7,7,5,3"; "" and "0" both give
/// an empty diagram.
pub fn parse_part_list(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|piece| piece.trim().parse::<u32>().map_err(|e| format!("bad part {piece:?}: {e}")))
        .collect()
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Partition, String> {
        let parts = parse_part_list(s)?;
        if !is_weakly_decreasing(&parts) {
            return Err(format!("parts must be weakly decreasing: {parts:?}"));
        }
        Ok(Partition { parts })
    }
}

/// Errors from cell and prefix lookups.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ShapeError {
    #[error("cell ({0}, {1}) is not in the shape")]
    CellNotInShape(usize, usize),
    #[error("prefix size {m} is out of range (the shape has {cells} cells)")]
    OutOfRange { m: usize, cells: usize },
}

/// A skew shape given by outer and inner part vectors of equal length. The
/// vectors are not forced to be partitions; `is_valid` tells whether the
/// shape is a genuine skew diagram, and invalid shapes denote the empty set
/// of fillings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Vec<u32>,
    inner: Vec<u32>,
}

impl SkewShape {
    /// Pads the shorter vector with zeros so both have the same length.
    pub fn new(outer: Vec<u32>, inner: Vec<u32>) -> SkewShape {
        let n = outer.len().max(inner.len());
        let mut outer = outer;
        let mut inner = inner;
        outer.resize(n, 0);
        inner.resize(n, 0);
        SkewShape { outer, inner }
    }

    pub fn from_partitions(outer: &Partition, inner: &Partition) -> SkewShape {
        SkewShape::new(outer.parts().to_vec(), inner.parts().to_vec())
    }

    pub fn outer(&self) -> &[u32] {
        &self.outer
    }

    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    /// Number of rows, counting empty ones.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Both vectors weakly decreasing and inner contained in outer.
    pub fn is_valid(&self) -> bool {
        is_weakly_decreasing(&self.outer)
            && is_weakly_decreasing(&self.inner)
            && self.outer.iter().zip(&self.inner).all(|(l, m)| m <= l)
    }

    /// Number of cells; 0 for invalid shapes, which denote the empty set.
    pub fn cell_count(&self) -> usize {
        if !self.is_valid() {
            return 0;
        }
        self.outer.iter().zip(&self.inner).map(|(l, m)| (l - m) as usize).sum()
    }

    /// 1-based cell membership: row r, column c.
    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r >= 1
            && r <= self.outer.len()
            && c >= 1
            && self.is_valid()
            && (self.inner[r - 1] as usize) < c
            && c <= self.outer[r - 1] as usize
    }

    /// All cells in the fill order: columns right to left, top to bottom
    /// within a column. Empty for invalid shapes.
    pub fn cells_in_order(&self) -> Vec<(usize, usize)> {
        if !self.is_valid() {
            return Vec::new();
        }
        let mut cells = Vec::with_capacity(self.cell_count());
        let widest = self.outer.first().copied().unwrap_or(0) as usize;
        for c in (1..=widest).rev() {
            for (i, (&l, &m)) in self.outer.iter().zip(&self.inner).enumerate() {
                if (m as usize) < c && c <= l as usize {
                    cells.push((i + 1, c));
                }
            }
        }
        cells
    }

    /// 0-based position of a cell in the fill order.
    pub fn cell_order_rank(&self, cell: (usize, usize)) -> Result<usize, ShapeError> {
        let (r, c) = cell;
        if !self.contains_cell(r, c) {
            return Err(ShapeError::CellNotInShape(r, c));
        }
        let mut rank = 0;
        for (i, (&l, &m)) in self.outer.iter().zip(&self.inner).enumerate() {
            let lo = m as usize;
            let hi = l as usize;
            // cells of row i+1 in columns after c, plus the column-c cell when
            // it sits in an earlier row
            rank += hi.max(c) - lo.max(c);
            if i + 1 < r && lo < c && c <= hi {
                rank += 1;
            }
        }
        Ok(rank)
    }

    /// The first m cells in the fill order, stored as per-row cell counts.
    pub fn prefix(&self, m: usize) -> Result<PrefixDiagram, ShapeError> {
        let cells = self.cell_count();
        if m > cells {
            return Err(ShapeError::OutOfRange { m, cells });
        }
        let mut rho = vec![0u32; self.outer.len()];
        for &(r, _) in self.cells_in_order().iter().take(m) {
            rho[r - 1] += 1;
        }
        Ok(PrefixDiagram { shape: self.clone(), rho })
    }

    /// Transposed shape with the given number of rows. Requires a valid shape
    /// and enough rows to hold every nonzero transposed part.
    pub fn transposed(&self, rows: usize) -> SkewShape {
        assert!(self.is_valid(), "cannot transpose an invalid skew shape");
        let outer = Partition::new(self.outer.clone()).transpose_with_len(rows);
        let inner = Partition::new(self.inner.clone()).transpose_with_len(rows);
        SkewShape::new(outer.parts.clone(), inner.parts.clone())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| {
            if v.is_empty() {
                return "0".to_string();
            }
            v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, "{}/{}", list(&self.outer), list(&self.inner))
    }
}

/// The first m cells of a skew shape in the fill order. Within each row these
/// form a right-justified suffix, so per-row counts determine the cell set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixDiagram {
    shape: SkewShape,
    rho: Vec<u32>,
}

impl PrefixDiagram {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Per-row cell counts.
    pub fn row_counts(&self) -> &[u32] {
        &self.rho
    }

    pub fn cell_count(&self) -> usize {
        self.rho.iter().map(|&r| r as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.cell_count() == self.shape.cell_count()
    }

    /// Rows that contain at least one cell (1-based).
    pub fn row_support(&self) -> BTreeSet<usize> {
        self.rho
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// 1-based membership test.
    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        if r < 1 || r > self.rho.len() {
            return false;
        }
        let l = self.shape.outer[r - 1] as usize;
        let filled = self.rho[r - 1] as usize;
        c > l - filled && c <= l
    }

    /// Column of the leftmost cell in row r, if the row is nonempty.
    pub fn leftmost_col(&self, r: usize) -> Option<usize> {
        let filled = self.rho[r - 1] as usize;
        (filled > 0).then(|| self.shape.outer[r - 1] as usize - filled + 1)
    }

    /// The next cell in the fill order, unless the diagram is already full.
    pub fn next_cell(&self) -> Option<(usize, usize)> {
        self.shape.cells_in_order().get(self.cell_count()).copied()
    }
}

/// Per-row entry bounds: row i admits values in alpha_i + 1 ..= beta_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flags {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl Flags {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Flags {
        assert_eq!(alpha.len(), beta.len(), "flag vectors must have equal length");
        Flags { alpha, beta }
    }

    /// alpha = (a, ..., a), beta = (b, ..., b) of length n.
    pub fn constant(n: usize, a: u32, b: u32) -> Flags {
        Flags { alpha: vec![a; n], beta: vec![b; n] }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }
}

// Both flag conditions quantify over adjacent row pairs whose rows overlap in
// some column, i.e. mu_i < lambda_{i+1}.
fn rows_overlap(shape: &SkewShape, i: usize) -> bool {
    shape.inner[i] < shape.outer[i + 1]
}

/// Column-determinant admissibility: alpha_i <= alpha_{i+1} + 1 and
/// beta_i <= beta_{i+1} + 1 whenever rows i and i+1 overlap.
pub fn flag_condition_col(shape: &SkewShape, flags: &Flags) -> bool {
    assert_eq!(flags.len(), shape.rows(), "flag length must match row count");
    (0..shape.rows().saturating_sub(1)).all(|i| {
        !rows_overlap(shape, i)
            || (flags.alpha[i] <= flags.alpha[i + 1] + 1 && flags.beta[i] <= flags.beta[i + 1] + 1)
    })
}

/// Row-determinant admissibility: alpha_i <= alpha_{i+1} and
/// beta_i <= beta_{i+1} whenever rows i and i+1 overlap.
pub fn flag_condition_row(shape: &SkewShape, flags: &Flags) -> bool {
    assert_eq!(flags.len(), shape.rows(), "flag length must match row count");
    (0..shape.rows().saturating_sub(1)).all(|i| {
        !rows_overlap(shape, i)
            || (flags.alpha[i] <= flags.alpha[i + 1] && flags.beta[i] <= flags.beta[i + 1])
    })
}

/// All weakly decreasing vectors of the given length with entries in 0..=max,
/// in lexicographic order. These are the Par_n sweeps used by verification.
pub fn weakly_decreasing_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, len: usize, bound: u32) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for v in 0..=bound {
            current.push(v);
            rec(out, current, len, v);
            current.pop();
        }
    }
    rec(&mut out, &mut current, len, max);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::new(vec![4, 3, 1]).transpose(), Partition::new(vec![3, 2, 2, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        let p = Partition::new(vec![5, 2, 2]);
        assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn cell_order_small() {
        let shape = SkewShape::new(vec![2, 1], vec![0, 0]);
        assert_eq!(shape.cells_in_order(), vec![(1, 2), (1, 1), (2, 1)]);
        assert_eq!(shape.cell_order_rank((1, 2)), Ok(0));
        assert_eq!(shape.cell_order_rank((1, 1)), Ok(1));
        assert_eq!(shape.cell_order_rank((2, 1)), Ok(2));
        assert_eq!(shape.cell_order_rank((2, 2)), Err(ShapeError::CellNotInShape(2, 2)));
    }

    #[test]
    fn cell_order_rank_is_a_bijection() {
        let shape = SkewShape::new(vec![4, 3, 3, 1], vec![2, 1, 0, 0]);
        let cells = shape.cells_in_order();
        assert_eq!(cells.len(), shape.cell_count());
        for (rank, &cell) in cells.iter().enumerate() {
            assert_eq!(shape.cell_order_rank(cell), Ok(rank));
        }
    }

    #[test]
    fn large_prefix_instance() {
        // lambda = (8,7,7,5,3), mu = (4,2), first 15 cells
        let shape = SkewShape::new(vec![8, 7, 7, 5, 3], vec![4, 2]);
        let rho = shape.prefix(15).unwrap();
        assert_eq!(rho.row_counts(), &[4, 5, 4, 2, 0]);
        assert_eq!(rho.row_support(), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(rho.leftmost_col(1), Some(5));
        assert_eq!(rho.leftmost_col(2), Some(3));
        assert_eq!(rho.leftmost_col(5), None);
        assert_eq!(rho.next_cell(), Some((3, 3)));
    }

    #[test]
    fn prefix_bounds() {
        let shape = SkewShape::new(vec![2, 2], vec![0, 0]);
        assert_eq!(shape.prefix(0).unwrap().cell_count(), 0);
        assert!(shape.prefix(4).unwrap().is_full());
        assert_eq!(shape.prefix(5), Err(ShapeError::OutOfRange { m: 5, cells: 4 }));
    }

    #[test]
    fn prefixes_are_row_suffixes_and_grow_one_cell() {
        let shape = SkewShape::new(vec![3, 3, 2], vec![1, 0, 0]);
        let total = shape.cell_count();
        for m in 0..total {
            let here = shape.prefix(m).unwrap();
            let next = shape.prefix(m + 1).unwrap();
            let grew: Vec<usize> = (0..3)
                .filter(|&i| next.row_counts()[i] != here.row_counts()[i])
                .collect();
            assert_eq!(grew.len(), 1);
            let r = grew[0];
            assert_eq!(next.row_counts()[r], here.row_counts()[r] + 1);
            // the added cell is the fill-order minimum of the remainder
            let added = (r + 1, shape.outer()[r] as usize - here.row_counts()[r] as usize);
            assert_eq!(shape.cells_in_order()[m], added);
        }
    }

    #[test]
    fn validity_and_containment() {
        assert!(SkewShape::new(vec![3, 2], vec![1, 0]).is_valid());
        assert!(!SkewShape::new(vec![3, 2], vec![0, 1]).is_valid());
        assert!(!SkewShape::new(vec![1, 1], vec![0, 1]).is_valid());
        assert!(!SkewShape::new(vec![2, 2], vec![3, 0]).is_valid());
        assert_eq!(SkewShape::new(vec![2, 3], vec![0, 0]).cell_count(), 0);
    }

    #[test]
    fn flag_conditions_on_the_counterexamples() {
        let remark1 = SkewShape::new(vec![3, 3], vec![2, 0]);
        assert!(!flag_condition_col(&remark1, &Flags::new(vec![2, 0], vec![2, 2])));
        let remark2 = SkewShape::new(vec![2, 2], vec![1, 0]);
        assert!(!flag_condition_row(&remark2, &Flags::new(vec![1, 0], vec![1, 1])));
        // zero flags always pass
        for shape in [&remark1, &remark2] {
            assert!(flag_condition_col(shape, &Flags::constant(2, 0, 0)));
            assert!(flag_condition_row(shape, &Flags::constant(2, 0, 0)));
        }
        // no overlap, so nothing is required
        let disjoint = SkewShape::new(vec![3, 1], vec![1, 0]);
        assert!(flag_condition_col(&disjoint, &Flags::new(vec![3, 0], vec![5, 1])));
        assert!(flag_condition_row(&disjoint, &Flags::new(vec![3, 0], vec![5, 1])));
    }

    #[test]
    fn transposed_shape() {
        let shape = SkewShape::new(vec![3, 3], vec![2, 0]);
        let tr = shape.transposed(3);
        assert_eq!(tr.outer(), &[2, 2, 2]);
        assert_eq!(tr.inner(), &[1, 1, 0]);
    }

    #[test]
    fn partition_text_round_trip() {
        let p: Partition = "8,7,7,5,3".parse().unwrap();
        assert_eq!(p.parts(), &[8, 7, 7, 5, 3]);
        assert_eq!(p.to_string(), "8,7,7,5,3");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap().parts(), &[0]);
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn weakly_decreasing_enumeration() {
        let all = weakly_decreasing_vectors(2, 2);
        assert_eq!(all, vec![
            vec![0, 0],
            vec![1, 0],
            vec![1, 1],
            vec![2, 0],
            vec![2, 1],
            vec![2, 2],
        ]);
    }
}
