//! Reverse plane partitions: the two weight systems, backtracking enumeration
//! of row-flagged fillings, the flagged generating functions, and the
//! partial-state sums that the determinant recurrences are checked against.
//!
//! Enumeration fills cells column by column from the right, top to bottom
//! within a column. At each new cell the admissible values form the interval
//! from max(alpha_r + 1, entry above) to (entry to the right, or beta_r),
//! which is exactly the branching interval of the fill recurrence, so sums
//! over partial states come for free.

use crate::polyring::{Monomial, Polynomial, Variable};
use crate::shapes::{Flags, PrefixDiagram, SkewShape};
use std::collections::BTreeSet;
use std::fmt;

/// A filling violates weak increase or its flag bounds.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum RppError {
    #[error("inconsistent partial filling: {0}")]
    InconsistentPartialFilling(String),
}

// Weight of a filling given, per row, the column of its first cell and its
// values left to right. x-exponent of v = number of columns containing v;
// t-exponent of row i = number of vertically adjacent equal pairs with upper
// cell in row i.
fn wt_of(first_cols: &[usize], rows: &[Vec<u32>]) -> Polynomial {
    let mut exps: Vec<(Variable, u32)> = Vec::new();
    let last_col = rows
        .iter()
        .zip(first_cols)
        .map(|(row, &f)| f + row.len())
        .max()
        .unwrap_or(1);
    let value_at = |i: usize, j: usize| -> Option<u32> {
        let f = first_cols[i];
        (j >= f && j < f + rows[i].len()).then(|| rows[i][j - f])
    };
    for j in 1..last_col {
        let mut seen = BTreeSet::new();
        for i in 0..rows.len() {
            if let Some(v) = value_at(i, j) {
                seen.insert(v);
            }
        }
        for v in seen {
            exps.push((Variable::x(v), 1));
        }
    }
    for i in 0..rows.len().saturating_sub(1) {
        for j in 1..last_col {
            if let (Some(a), Some(b)) = (value_at(i, j), value_at(i + 1, j)) {
                if a == b {
                    exps.push((Variable::t(i as u32 + 1), 1));
                }
            }
        }
    }
    Polynomial::monomial(Monomial::from_exponents(exps), 1)
}

// Transposed weight: x-exponent of v = number of rows containing v;
// t-exponent of column j = number of horizontally adjacent equal pairs with
// left cell in column j.
fn owt_of(first_cols: &[usize], rows: &[Vec<u32>]) -> Polynomial {
    let mut exps: Vec<(Variable, u32)> = Vec::new();
    for row in rows {
        let mut seen = BTreeSet::new();
        for &v in row {
            seen.insert(v);
        }
        for v in seen {
            exps.push((Variable::x(v), 1));
        }
    }
    for (row, &f) in rows.iter().zip(first_cols) {
        for (k, pair) in row.windows(2).enumerate() {
            if pair[0] == pair[1] {
                exps.push((Variable::t((f + k) as u32), 1));
            }
        }
    }
    Polynomial::monomial(Monomial::from_exponents(exps), 1)
}

// Weak increase along rows and down columns, checked on adjacent pairs. For
// full skew shapes and fill-order prefixes, adjacent pairs imply the full
// order (any comparable pair is joined by a path of adjacent cells inside the
// diagram).
fn check_monotone(first_cols: &[usize], rows: &[Vec<u32>]) -> Result<(), RppError> {
    let value_at = |i: usize, j: usize| -> Option<u32> {
        let f = first_cols[i];
        (j >= f && j < f + rows[i].len()).then(|| rows[i][j - f])
    };
    for i in 0..rows.len() {
        for (k, pair) in rows[i].windows(2).enumerate() {
            if pair[0] > pair[1] {
                return Err(RppError::InconsistentPartialFilling(format!(
                    "row {} decreases at column {}",
                    i + 1,
                    first_cols[i] + k
                )));
            }
        }
        if i + 1 < rows.len() {
            for j in first_cols[i]..first_cols[i] + rows[i].len() {
                if let (Some(a), Some(b)) = (value_at(i, j), value_at(i + 1, j)) {
                    if a > b {
                        return Err(RppError::InconsistentPartialFilling(format!(
                            "column {} decreases at row {}",
                            j,
                            i + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// A reverse plane partition on a skew shape: row i holds the values of
/// columns inner_i + 1 ..= outer_i, weakly increasing along rows and columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rpp {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Rpp {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Rpp, RppError> {
        if !shape.is_valid() {
            return Err(RppError::InconsistentPartialFilling(format!(
                "{shape} is not a valid skew shape"
            )));
        }
        if rows.len() != shape.rows()
            || rows
                .iter()
                .enumerate()
                .any(|(i, row)| row.len() != (shape.outer()[i] - shape.inner()[i]) as usize)
        {
            return Err(RppError::InconsistentPartialFilling(
                "row lengths do not match the shape".to_string(),
            ));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(RppError::InconsistentPartialFilling("entries must be positive".to_string()));
        }
        check_monotone(&Rpp::first_cols(&shape), &rows)?;
        Ok(Rpp { shape, rows })
    }

    fn first_cols(shape: &SkewShape) -> Vec<usize> {
        shape.inner().iter().map(|&m| m as usize + 1).collect()
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// 1-based entry lookup.
    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        Some(self.rows[r - 1][c - 1 - self.shape.inner()[r - 1] as usize])
    }

    /// wt(R): x_v counts columns containing v, t_i counts vertical equal pairs
    /// below row i.
    pub fn wt(&self) -> Polynomial {
        wt_of(&Rpp::first_cols(&self.shape), &self.rows)
    }

    /// owt(R): rows containing v and horizontal equal pairs; equals wt of the
    /// transpose.
    pub fn owt(&self) -> Polynomial {
        owt_of(&Rpp::first_cols(&self.shape), &self.rows)
    }

    /// The transposed filling on the transposed shape.
    pub fn transpose(&self) -> Rpp {
        let cols = self.shape.outer().first().copied().unwrap_or(0) as usize;
        let shape = self.shape.transposed(cols);
        let rows: Vec<Vec<u32>> = (1..=cols)
            .map(|i| {
                (shape.inner()[i - 1] as usize + 1..=shape.outer()[i - 1] as usize)
                    .map(|j| self.entry(j, i).expect("transpose cell must exist"))
                    .collect()
            })
            .collect();
        Rpp { shape, rows }
    }
}

// Rows top to bottom, entries space-separated, "." for inner cells.
impl fmt::Display for Rpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut pieces: Vec<String> =
                (0..self.shape.inner()[i]).map(|_| ".".to_string()).collect();
            pieces.extend(row.iter().map(|v| v.to_string()));
            write!(f, "{}", pieces.join(" "))?;
        }
        Ok(())
    }
}

/// An RPP on a fill-order prefix of a skew shape: row i holds the values of
/// its rightmost row_counts[i] cells, left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFilling {
    diagram: PrefixDiagram,
    rows: Vec<Vec<u32>>,
}

impl PartialFilling {
    pub fn new(diagram: PrefixDiagram, rows: Vec<Vec<u32>>) -> Result<PartialFilling, RppError> {
        if rows.len() != diagram.row_counts().len()
            || rows
                .iter()
                .zip(diagram.row_counts())
                .any(|(row, &count)| row.len() != count as usize)
        {
            return Err(RppError::InconsistentPartialFilling(
                "row lengths do not match the prefix diagram".to_string(),
            ));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(RppError::InconsistentPartialFilling("entries must be positive".to_string()));
        }
        let filling = PartialFilling { diagram, rows };
        check_monotone(&filling.first_cols(), &filling.rows)?;
        Ok(filling)
    }

    /// The empty filling of the empty prefix.
    pub fn empty(shape: &SkewShape) -> PartialFilling {
        let diagram = shape.prefix(0).expect("empty prefix always exists");
        let rows = vec![Vec::new(); shape.rows()];
        PartialFilling { diagram, rows }
    }

    fn first_cols(&self) -> Vec<usize> {
        let shape = self.diagram.shape();
        shape
            .outer()
            .iter()
            .zip(self.diagram.row_counts())
            .map(|(&l, &k)| l as usize - k as usize + 1)
            .collect()
    }

    pub fn diagram(&self) -> &PrefixDiagram {
        &self.diagram
    }

    pub fn shape(&self) -> &SkewShape {
        self.diagram.shape()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// 1-based entry lookup.
    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        if !self.diagram.contains_cell(r, c) {
            return None;
        }
        let first = self.first_cols()[r - 1];
        Some(self.rows[r - 1][c - first])
    }

    pub fn wt(&self) -> Polynomial {
        wt_of(&self.first_cols(), &self.rows)
    }

    pub fn owt(&self) -> Polynomial {
        owt_of(&self.first_cols(), &self.rows)
    }

    /// True iff every entry lies in its row's flag interval.
    pub fn respects_flags(&self, flags: &Flags) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter().all(|&v| flags.alpha[i] < v && v <= flags.beta[i])
        })
    }

    /// The bound vector used by the partial-state determinants: the leftmost
    /// filled entry where the row has cells, beta elsewhere.
    pub fn effective_bounds(&self, beta: &[u32]) -> Vec<u32> {
        (0..self.rows.len())
            .map(|i| match self.rows[i].first() {
                Some(&v) => v,
                None => beta[i],
            })
            .collect()
    }

    /// The filling extended by one value at the next cell of the fill order.
    /// Panics if the diagram is already full; monotonicity is not rechecked.
    pub fn extended(&self, value: u32) -> PartialFilling {
        let (r, _) = self.diagram.next_cell().expect("cannot extend a full filling");
        let shape = self.diagram.shape().clone();
        let mut rho = self.diagram.row_counts().to_vec();
        rho[r - 1] += 1;
        let m = self.diagram.cell_count() + 1;
        let diagram = shape.prefix(m).expect("prefix must exist");
        debug_assert_eq!(diagram.row_counts(), rho);
        let mut rows = self.rows.clone();
        rows[r - 1].insert(0, value);
        PartialFilling { diagram, rows }
    }
}

impl fmt::Display for PartialFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first_cols = self.first_cols();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut pieces: Vec<String> = (1..first_cols[i]).map(|_| ".".to_string()).collect();
            pieces.extend(row.iter().map(|v| v.to_string()));
            write!(f, "{}", pieces.join(" "))?;
        }
        Ok(())
    }
}

// Backtracking core. `rows_rev` holds each row's values in fill order
// (rightmost first); the visitor runs once per complete filling.
fn extend_all<F: FnMut(&[Vec<u32>])>(
    shape: &SkewShape,
    flags: &Flags,
    cells: &[(usize, usize)],
    pos: usize,
    rows_rev: &mut [Vec<u32>],
    visit: &mut F,
) {
    if pos == cells.len() {
        visit(rows_rev);
        return;
    }
    let (r, c) = cells[pos];
    let upper = match rows_rev[r - 1].last() {
        Some(&right) => right,
        None => flags.beta[r - 1],
    };
    let mut lower = flags.alpha[r - 1] + 1;
    if r >= 2 && shape.contains_cell(r - 1, c) {
        // by the fill order, the cell above is already filled: it is the most
        // recent entry of row r-1
        let above = *rows_rev[r - 2].last().expect("cell above must be filled");
        lower = lower.max(above);
    }
    for v in lower..=upper {
        rows_rev[r - 1].push(v);
        extend_all(shape, flags, cells, pos + 1, rows_rev, visit);
        rows_rev[r - 1].pop();
    }
}

fn rows_rev_to_rpp(shape: &SkewShape, rows_rev: &[Vec<u32>]) -> Rpp {
    let rows = rows_rev
        .iter()
        .map(|row| row.iter().rev().copied().collect())
        .collect();
    Rpp { shape: shape.clone(), rows }
}

/// All RPPs of the shape whose row r entries lie in alpha_r + 1 ..= beta_r,
/// in lexicographic order of their fill-order entry sequences. Invalid shapes
/// give the empty list.
pub fn enumerate_row_flagged(shape: &SkewShape, flags: &Flags) -> Vec<Rpp> {
    assert_eq!(flags.len(), shape.rows(), "flag length must match row count");
    if !shape.is_valid() {
        return Vec::new();
    }
    let cells = shape.cells_in_order();
    let mut rows_rev = vec![Vec::new(); shape.rows()];
    let mut out = Vec::new();
    extend_all(shape, flags, &cells, 0, &mut rows_rev, &mut |rows| {
        out.push(rows_rev_to_rpp(shape, rows));
    });
    out
}

/// Row-flagged generating function: the sum of wt(R) over
/// [`enumerate_row_flagged`].
pub fn g_row_flagged(shape: &SkewShape, flags: &Flags) -> Polynomial {
    assert_eq!(flags.len(), shape.rows(), "flag length must match row count");
    if !shape.is_valid() {
        return Polynomial::zero();
    }
    let cells = shape.cells_in_order();
    let first_cols = Rpp::first_cols(shape);
    let mut rows_rev = vec![Vec::new(); shape.rows()];
    let mut acc = Polynomial::zero();
    extend_all(shape, flags, &cells, 0, &mut rows_rev, &mut |rows| {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().rev().copied().collect()).collect();
        acc += &wt_of(&first_cols, &rows);
    });
    acc
}

/// Column-flagged generating function of the given (already transposed)
/// shape: flags apply to its columns. Computed by enumerating row-flagged
/// RPPs of the transpose and summing owt(R).
pub fn g_col_flagged(shape_outer_transposed: &SkewShape, flags: &Flags) -> Polynomial {
    if !shape_outer_transposed.is_valid() {
        return Polynomial::zero();
    }
    let row_shape = shape_outer_transposed.transposed(flags.len());
    assert_eq!(flags.len(), row_shape.rows());
    let cells = row_shape.cells_in_order();
    let first_cols = Rpp::first_cols(&row_shape);
    let mut rows_rev = vec![Vec::new(); row_shape.rows()];
    let mut acc = Polynomial::zero();
    extend_all(&row_shape, flags, &cells, 0, &mut rows_rev, &mut |rows| {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().rev().copied().collect()).collect();
        acc += &owt_of(&first_cols, &rows);
    });
    acc
}

/// The unflagged generating function truncated to the x-variables
/// x_1, ..., x_{n_x}: row flags alpha = 0, beta = n_x. It determines the
/// symmetric function once n_x is at least the number of cells.
pub fn g_unflagged_truncated(shape: &SkewShape, n_x: u32) -> Polynomial {
    g_row_flagged(shape, &Flags::constant(shape.rows(), 0, n_x))
}

pub(crate) fn check_partial(flags: &Flags, r0: &PartialFilling) -> Result<(), RppError> {
    assert_eq!(flags.len(), r0.shape().rows(), "flag length must match row count");
    if !r0.respects_flags(flags) {
        return Err(RppError::InconsistentPartialFilling(
            "an entry lies outside its row's flag interval".to_string(),
        ));
    }
    Ok(())
}

fn partial_sum(flags: &Flags, r0: &PartialFilling, transposed_weight: bool) -> Result<Polynomial, RppError> {
    check_partial(flags, r0)?;
    let shape = r0.shape();
    if !shape.is_valid() {
        return Ok(Polynomial::zero());
    }
    let cells = shape.cells_in_order();
    let first_cols = Rpp::first_cols(shape);
    let mut rows_rev: Vec<Vec<u32>> = r0
        .rows()
        .iter()
        .map(|row| row.iter().rev().copied().collect())
        .collect();
    let mut acc = Polynomial::zero();
    extend_all(shape, flags, &cells, r0.diagram().cell_count(), &mut rows_rev, &mut |rows| {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().rev().copied().collect()).collect();
        acc += &if transposed_weight { owt_of(&first_cols, &rows) } else { wt_of(&first_cols, &rows) };
    });
    Ok(acc)
}

/// Sum of wt(R) over all flagged RPPs of the full shape that restrict to r0
/// on its prefix.
pub fn r_partial(flags: &Flags, r0: &PartialFilling) -> Result<Polynomial, RppError> {
    partial_sum(flags, r0, false)
}

/// Sum of owt(R) over the same set as [`r_partial`].
pub fn r_bar_partial(flags: &Flags, r0: &PartialFilling) -> Result<Polynomial, RppError> {
    partial_sum(flags, r0, true)
}
