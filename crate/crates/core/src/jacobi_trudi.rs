//! Determinant side of the story. The generating functions from [`crate::rpp_enum`]
//! are also determinants of matrices whose entries are elementary or complete
//! homogeneous symmetric functions of interval alphabets, with prefix t-alphabets
//! added or subtracted. This module builds those matrices and evaluates their
//! determinants exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::alphabets::{e_pleth, h_pleth, t_prefix, x_interval, Alphabet, Sign};
use crate::polyring::{Polynomial, Variable};
use crate::rpp_enum::{check_partial, PartialFilling, RppError};
use crate::shapes::{is_weakly_decreasing, Flags, SkewShape};

/// Rows of a matrix whose entries take the alternate ("barred") form.
pub type RowSet = BTreeSet<usize>;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum JtError {
    #[error("outer and inner shapes must be weakly decreasing")]
    NonPartitionInput,
    #[error(transparent)]
    Filling(#[from] RppError),
}

/// Square matrix over the polynomial ring, 1-based indexing.
pub struct RingMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl RingMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> RingMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        RingMatrix { n, entries }
    }

    pub fn identity(n: usize) -> RingMatrix {
        RingMatrix::from_fn(n, |i, j| if i == j { Polynomial::one() } else { Polynomial::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        assert!(1 <= i && i <= self.n && 1 <= j && j <= self.n, "matrix index out of range");
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Laplace expansion memoized over column subsets: dp[mask] is the minor
    /// on the first popcount(mask) rows and the columns in mask. O(2^n * n)
    /// ring multiplications, exact throughout.
    pub fn det(&self) -> Polynomial {
        if self.n == 0 {
            return Polynomial::one();
        }
        let full = (1usize << self.n) - 1;
        let mut dp = vec![Polynomial::zero(); full + 1];
        dp[0] = Polynomial::one();
        for mask in 1..=full {
            let row = mask.count_ones() as usize - 1;
            let mut acc = Polynomial::zero();
            // pos = rank of column j within mask; the cofactor sign along the
            // bottom row of the submatrix is (-1)^(row + pos).
            let mut pos = 0;
            for j in 0..self.n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.entry(row + 1, j + 1);
                if !a.is_zero() {
                    let sub = &dp[mask & !(1 << j)];
                    if !sub.is_zero() {
                        let term = a * sub;
                        if (row + pos).is_multiple_of(2) {
                            acc += &term;
                        } else {
                            acc = &acc - &term;
                        }
                    }
                }
                pos += 1;
            }
            dp[mask] = acc;
        }
        std::mem::take(&mut dp[full])
    }
}

// X_(x_lo, x_hi] + T_{t_plus} - T_{t_minus}. The two prefixes only ever meet
// with multiplicities in {-1, 0, 1}, so the cancellation in combine is safe.
fn entry_alphabet(x_lo: i64, x_hi: i64, t_plus: i64, t_minus: i64) -> Alphabet {
    x_interval(x_lo, x_hi)
        .combine(&t_prefix(t_plus), Sign::Plus)
        .combine(&t_prefix(t_minus), Sign::Minus)
}

/// Entry e_{lambda_i - i - mu_j + j} of the column-flagged determinant:
/// the alphabet is X_(alpha_j, beta_i] + T_{lambda_i - 1} - T_{mu_j}, except
/// that rows in `cols` use X_(alpha_j, beta_i - 1] + T_{lambda_i} - T_{mu_j}.
/// `lambda` may be any composition; `mu` is expected weakly decreasing by the
/// determinant-level callers but is not checked here.
pub fn e_entry(lambda: &[u32], mu: &[u32], flags: &Flags, cols: &RowSet, i: usize, j: usize) -> Polynomial {
    let (li, mj) = (lambda[i - 1] as i64, mu[j - 1] as i64);
    let k = li - i as i64 - mj + j as i64;
    let (aj, bi) = (flags.alpha[j - 1] as i64, flags.beta[i - 1] as i64);
    let a = if cols.contains(&i) {
        entry_alphabet(aj, bi - 1, li, mj)
    } else {
        entry_alphabet(aj, bi, li - 1, mj)
    };
    e_pleth(k, &a)
}

/// Same degree as [`e_entry`] but evaluated on the explicit finite variable
/// list x_{alpha_j+1..beta_i}, t_{mu_j+1..lambda_i-1}; both lists may be
/// empty. No subtracted alphabet appears, so this is a plain elementary
/// symmetric polynomial.
pub fn e_entry_finite(lambda: &[u32], mu: &[u32], flags: &Flags, i: usize, j: usize) -> Polynomial {
    let (li, mj) = (lambda[i - 1] as i64, mu[j - 1] as i64);
    let k = li - i as i64 - mj + j as i64;
    let (aj, bi) = (flags.alpha[j - 1], flags.beta[i - 1]);
    let mut vars: Vec<Variable> = Vec::new();
    for s in aj + 1..=bi {
        vars.push(Variable::x(s));
    }
    let mut s = mj + 1;
    while s < li {
        vars.push(Variable::t(s as u32));
        s += 1;
    }
    e_pleth(k, &Alphabet::from_parts(vars, []))
}

/// Entry h_{lambda_i - i - mu_j + j} of the row-flagged determinant: alphabet
/// X_(alpha_j, beta_i] + T_{i-1} - T_{j-1}. Rows in `cols` carry the factor
/// chi(alpha_j < beta_i) instead of changing the alphabet.
pub fn h_entry(lambda: &[u32], mu: &[u32], flags: &Flags, cols: &RowSet, i: usize, j: usize) -> Polynomial {
    let (li, mj) = (lambda[i - 1] as i64, mu[j - 1] as i64);
    let k = li - i as i64 - mj + j as i64;
    let (aj, bi) = (flags.alpha[j - 1] as i64, flags.beta[i - 1] as i64);
    if cols.contains(&i) && aj >= bi {
        return Polynomial::zero();
    }
    h_pleth(k, &entry_alphabet(aj, bi, i as i64 - 1, j as i64 - 1))
}

fn check_lengths(lambda: &[u32], mu: &[u32], flags: &Flags) {
    assert_eq!(lambda.len(), mu.len(), "outer and inner must have equal length");
    assert_eq!(lambda.len(), flags.len(), "flags must match shape length");
}

/// det(e-entries) with the rows in `cols` barred. Accepts compositions.
pub fn e_det_general(lambda: &[u32], mu: &[u32], flags: &Flags, cols: &RowSet) -> Polynomial {
    check_lengths(lambda, mu, flags);
    RingMatrix::from_fn(lambda.len(), |i, j| e_entry(lambda, mu, flags, cols, i, j)).det()
}

/// det(h-entries) with the rows in `cols` barred. Accepts compositions.
pub fn h_det_general(lambda: &[u32], mu: &[u32], flags: &Flags, cols: &RowSet) -> Polynomial {
    check_lengths(lambda, mu, flags);
    RingMatrix::from_fn(lambda.len(), |i, j| h_entry(lambda, mu, flags, cols, i, j)).det()
}

fn check_partitions(shape: &SkewShape) -> Result<(), JtError> {
    if is_weakly_decreasing(shape.outer()) && is_weakly_decreasing(shape.inner()) {
        Ok(())
    } else {
        Err(JtError::NonPartitionInput)
    }
}

/// Column-flagged determinant, no barred rows. When the column flag condition
/// holds this equals [`crate::rpp_enum::g_col_flagged`] on the transposed
/// shape; without it the two sides can differ.
pub fn e_det(shape: &SkewShape, flags: &Flags) -> Result<Polynomial, JtError> {
    check_partitions(shape)?;
    Ok(e_det_general(shape.outer(), shape.inner(), flags, &RowSet::new()))
}

/// Same determinant with every entry evaluated on its finite variable list.
/// Agrees with [`e_det`] for all partitions and flags.
pub fn e_det_finite(shape: &SkewShape, flags: &Flags) -> Result<Polynomial, JtError> {
    check_partitions(shape)?;
    assert_eq!(shape.rows(), flags.len(), "flags must match shape length");
    Ok(RingMatrix::from_fn(shape.rows(), |i, j| {
        e_entry_finite(shape.outer(), shape.inner(), flags, i, j)
    })
    .det())
}

/// Row-flagged determinant, no barred rows. When the row flag condition holds
/// this equals [`crate::rpp_enum::g_row_flagged`].
pub fn h_det(shape: &SkewShape, flags: &Flags) -> Result<Polynomial, JtError> {
    check_partitions(shape)?;
    Ok(h_det_general(shape.outer(), shape.inner(), flags, &RowSet::new()))
}

// Shared setup for the partial-state determinants: the unfilled region
// lambda - rho (a composition), the effective row bounds, and the rows the
// prefix touches.
fn partial_parts(flags: &Flags, r0: &PartialFilling) -> Result<(Vec<u32>, Flags, RowSet), JtError> {
    check_partial(flags, r0)?;
    let shape = r0.shape();
    check_partitions(shape)?;
    if !shape.is_valid() {
        // weakly decreasing but inner exceeding outer somewhere
        return Err(JtError::NonPartitionInput);
    }
    let rho = r0.diagram().row_counts();
    let remaining: Vec<u32> = shape.outer().iter().zip(rho).map(|(l, r)| l - r).collect();
    let sub_flags = Flags::new(flags.alpha.clone(), r0.effective_bounds(&flags.beta));
    Ok((remaining, sub_flags, r0.diagram().row_support()))
}

/// Partial-state version of [`e_det`]: owt(r0) times the e-determinant of the
/// unfilled region, with beta replaced by the effective bounds of r0 and the
/// rows meeting the prefix barred. For the empty prefix this is exactly
/// [`e_det`]; for a full filling it collapses to owt(r0).
pub fn ee_partial(flags: &Flags, r0: &PartialFilling) -> Result<Polynomial, JtError> {
    let (remaining, sub_flags, prefix_rows) = partial_parts(flags, r0)?;
    let det = e_det_general(&remaining, r0.shape().inner(), &sub_flags, &prefix_rows);
    Ok(r0.owt() * det)
}

/// Partial-state version of the row-flagged determinant: wt(r0) times the
/// h-determinant of the unfilled region with every row barred. For the empty
/// prefix this is [`h_det_general`] with all rows barred, which agrees with
/// [`h_det`] whenever alpha is weakly increasing, alpha < beta, and mu < lambda.
pub fn hh_partial(flags: &Flags, r0: &PartialFilling) -> Result<Polynomial, JtError> {
    let (remaining, sub_flags, _) = partial_parts(flags, r0)?;
    let all_rows: RowSet = (1..=r0.shape().rows()).collect();
    let det = h_det_general(&remaining, r0.shape().inner(), &sub_flags, &all_rows);
    Ok(r0.wt() * det)
}

// Generalized binomial coefficient: top may be negative, i >= 0. Product of a
// falling factorial divided exactly by i!.
fn binomial_ext(top: i64, i: i64) -> BigInt {
    assert!(i >= 0);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for s in 0..i {
        num *= BigInt::from(top - s);
        den *= BigInt::from(s + 1);
    }
    let (q, r) = num_integer_div_rem(num, den);
    assert!(r.is_zero(), "binomial coefficient must be an integer");
    q
}

fn num_integer_div_rem(a: BigInt, b: BigInt) -> (BigInt, BigInt) {
    let q = &a / &b;
    let r = &a - &q * &b;
    (q, r)
}

/// The operator phi applied k times to h_n over x_1..x_{n_x}:
/// sum_{i=0}^{n} binom(k+i-1, i) h_{n-i}(x_1..x_{n_x}). Negative k uses the
/// generalized binomial, giving the inverse operator; n < 0 yields 0.
pub fn phi_h(k: i64, n: i64, n_x: u32) -> Polynomial {
    if n < 0 {
        return Polynomial::zero();
    }
    let xs = x_interval(0, n_x as i64);
    let mut acc = Polynomial::zero();
    for i in 0..=n {
        let c = binomial_ext(k + i - 1, i);
        if c.is_zero() {
            continue;
        }
        acc += &(Polynomial::constant(c) * h_pleth(n - i, &xs));
    }
    acc
}

/// det(phi^{i-j} h_{lambda_i - mu_j - i + j}) over x_1..x_{n_x}: the dual
/// stable Grothendieck polynomial, i.e. the t = 1 specialization of the
/// unflagged truncated generating function.
pub fn g_dual_via_phi(shape: &SkewShape, n_x: u32) -> Result<Polynomial, JtError> {
    check_partitions(shape)?;
    let (outer, inner) = (shape.outer(), shape.inner());
    Ok(RingMatrix::from_fn(shape.rows(), |i, j| {
        let n = outer[i - 1] as i64 - inner[j - 1] as i64 - i as i64 + j as i64;
        phi_h(i as i64 - j as i64, n, n_x)
    })
    .det())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpp_enum::{g_row_flagged, r_bar_partial, r_partial};

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn no_bars() -> RowSet {
        RowSet::new()
    }

    #[test]
    fn determinant_basics() {
        for n in 0..4 {
            assert!(RingMatrix::identity(n).det().is_one());
        }
        // 2x2 blocks frozen from hand expansion
        let m = RingMatrix::from_fn(2, |i, j| match (i, j) {
            (1, 1) => Polynomial::zero(),
            (1, 2) => poly("x1*x2*t1*t2"),
            (2, 1) => Polynomial::one(),
            (2, 2) => e_pleth(
                3,
                &Alphabet::from_parts(
                    [Variable::x(1), Variable::x(2), Variable::t(1), Variable::t(2)],
                    [],
                ),
            ),
            _ => unreachable!(),
        });
        assert_eq!(m.det(), poly("-x1*x2*t1*t2"));

        let m = RingMatrix::from_fn(2, |i, j| match (i, j) {
            (1, 1) => poly("x1"),
            (1, 2) => poly("x1 - t1"),
            _ => Polynomial::one(),
        });
        assert_eq!(m.det(), poly("t1"));
    }

    #[test]
    fn determinant_matches_leibniz_3x3() {
        let e: Vec<Polynomial> = [
            "x1 + t1", "x2", "t1 - x1", "x1*x2", "1", "t2", "x1 + 1", "0", "x2 - t2",
        ]
        .iter()
        .map(|s| poly(s))
        .collect();
        let m = RingMatrix::from_fn(3, |i, j| e[(i - 1) * 3 + (j - 1)].clone());
        let a = |i: usize, j: usize| &e[(i - 1) * 3 + (j - 1)];
        let leibniz = &(&(a(1, 1) * a(2, 2)) * a(3, 3)) + &(&(a(1, 2) * a(2, 3)) * a(3, 1))
            + (&(a(1, 3) * a(2, 1)) * a(3, 2))
            - (&(a(1, 3) * a(2, 2)) * a(3, 1))
            - (&(a(1, 1) * a(2, 3)) * a(3, 2))
            - (&(a(1, 2) * a(2, 1)) * a(3, 3));
        assert_eq!(m.det(), leibniz);
    }

    #[test]
    fn e_entries_on_first_counterexample() {
        // lambda=(3,3), mu=(2,0), alpha=(2,0), beta=(2,2): the 2x2 matrix is
        // [[0, x1x2t1t2], [1, e_3(x1,x2,t1,t2)]] and its determinant is
        // -x1x2t1t2, while the column enumeration vanishes.
        let (l, m) = (vec![3u32, 3], vec![2u32, 0]);
        let f = Flags::new(vec![2, 0], vec![2, 2]);
        assert!(e_entry(&l, &m, &f, &no_bars(), 1, 1).is_zero());
        assert_eq!(e_entry(&l, &m, &f, &no_bars(), 1, 2), poly("x1*x2*t1*t2"));
        assert!(e_entry(&l, &m, &f, &no_bars(), 2, 1).is_one());
        let e3 = e_pleth(
            3,
            &Alphabet::from_parts([Variable::x(1), Variable::x(2), Variable::t(1), Variable::t(2)], []),
        );
        assert_eq!(e_entry(&l, &m, &f, &no_bars(), 2, 2), e3);

        let shape = SkewShape::new(l.clone(), m.clone());
        assert_eq!(e_det(&shape, &f).unwrap(), poly("-x1*x2*t1*t2"));

        // finite evaluation gives the same four entries here
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(e_entry_finite(&l, &m, &f, i, j), e_entry(&l, &m, &f, &no_bars(), i, j));
            }
        }
        assert_eq!(e_det_finite(&shape, &f).unwrap(), poly("-x1*x2*t1*t2"));
    }

    #[test]
    fn e_entry_degenerate_cases() {
        let f = Flags::new(vec![1, 1], vec![1, 1]);
        // diagonal of an equal-shape matrix is e_0 = 1
        assert!(e_entry(&[2, 1], &[2, 1], &f, &no_bars(), 1, 1).is_one());
        // negative degree vanishes: lambda_2 - 2 - mu_1 + 1 = -2
        assert!(e_entry(&[2, 1], &[2, 1], &f, &no_bars(), 2, 1).is_zero());
        // empty finite list with positive degree
        let f1 = Flags::new(vec![1], vec![1]);
        assert!(e_entry_finite(&[1], &[0], &f1, 1, 1).is_zero());
        assert!(e_entry_finite(&[2], &[2], &f1, 1, 1).is_one());
    }

    #[test]
    fn h_entries_on_second_and_third_counterexamples() {
        // lambda=(2,2), mu=(1,0), alpha=(1,0), beta=(1,1)
        let (l, m) = (vec![2u32, 2], vec![1u32, 0]);
        let f = Flags::new(vec![1, 0], vec![1, 1]);
        assert!(h_entry(&l, &m, &f, &no_bars(), 1, 1).is_zero());
        assert_eq!(h_entry(&l, &m, &f, &no_bars(), 1, 2), poly("x1^3 - x1^2*t1"));
        assert!(h_entry(&l, &m, &f, &no_bars(), 2, 1).is_one());
        assert_eq!(h_entry(&l, &m, &f, &no_bars(), 2, 2), poly("x1^2"));
        let shape = SkewShape::new(l.clone(), m.clone());
        assert_eq!(h_det(&shape, &f).unwrap(), poly("-x1^3 + x1^2*t1"));
        assert!(g_row_flagged(&shape, &f).is_zero());

        // lambda=(1,1), mu=(0,1): mu is not weakly decreasing, so only the
        // raw entry builders apply
        let (l, m) = (vec![1u32, 1], vec![0u32, 1]);
        let f = Flags::new(vec![0, 0], vec![1, 1]);
        assert_eq!(h_entry(&l, &m, &f, &no_bars(), 1, 1), poly("x1"));
        assert_eq!(h_entry(&l, &m, &f, &no_bars(), 1, 2), poly("x1 - t1"));
        assert!(h_entry(&l, &m, &f, &no_bars(), 2, 1).is_one());
        assert!(h_entry(&l, &m, &f, &no_bars(), 2, 2).is_one());
        let det = RingMatrix::from_fn(2, |i, j| h_entry(&l, &m, &f, &no_bars(), i, j)).det();
        assert_eq!(det, poly("t1"));
        assert_eq!(h_det(&SkewShape::new(l, m), &f), Err(JtError::NonPartitionInput));
    }

    #[test]
    fn barred_h_entry_uses_indicator() {
        let bars: RowSet = [1].into();
        let f = Flags::new(vec![2, 0], vec![1, 3]);
        // alpha_1 = 2 >= beta_1 = 1 kills the (1,1) entry once row 1 is barred
        assert!(h_entry(&[2, 1], &[0, 0], &f, &bars, 1, 1).is_zero());
        assert_eq!(
            h_entry(&[2, 1], &[0, 0], &f, &bars, 1, 2),
            h_entry(&[2, 1], &[0, 0], &f, &no_bars(), 1, 2)
        );
    }

    #[test]
    fn equal_shapes_give_unit_determinants() {
        let shape = SkewShape::new(vec![3, 1, 0], vec![3, 1, 0]);
        for flags in [
            Flags::new(vec![2, 5, 1], vec![0, 4, 4]),
            Flags::constant(3, 0, 0),
            Flags::new(vec![0, 1, 2], vec![3, 3, 3]),
        ] {
            assert!(e_det(&shape, &flags).unwrap().is_one());
            assert!(e_det_finite(&shape, &flags).unwrap().is_one());
            assert!(h_det(&shape, &flags).unwrap().is_one());
        }
        // with every row barred the unit diagonal needs alpha < beta
        let mu = vec![3u32, 1, 0];
        let all: RowSet = [1, 2, 3].into();
        let good = Flags::new(vec![0, 1, 2], vec![3, 3, 3]);
        assert!(h_det_general(&mu, &mu, &good, &all).is_one());
        let bad = Flags::new(vec![3, 1, 2], vec![3, 3, 3]);
        assert!(h_det_general(&mu, &mu, &bad, &all).is_zero());
        assert!(e_det_general(&mu, &mu, &good, &all).is_one());
    }

    #[test]
    fn non_contained_inner_gives_zero() {
        let shape = SkewShape::new(vec![2, 2], vec![3, 0]);
        let flags = Flags::constant(2, 0, 3);
        assert!(e_det(&shape, &flags).unwrap().is_zero());
        assert!(e_det_finite(&shape, &flags).unwrap().is_zero());
        assert!(h_det(&shape, &flags).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_partitions() {
        let shape = SkewShape::new(vec![1, 2], vec![0, 0]);
        let flags = Flags::constant(2, 0, 2);
        assert_eq!(e_det(&shape, &flags), Err(JtError::NonPartitionInput));
        assert_eq!(e_det_finite(&shape, &flags), Err(JtError::NonPartitionInput));
        assert_eq!(h_det(&shape, &flags), Err(JtError::NonPartitionInput));
        assert_eq!(g_dual_via_phi(&shape, 2), Err(JtError::NonPartitionInput));
    }

    #[test]
    fn partial_determinants_bracket_the_full_ones() {
        let shape = SkewShape::new(vec![2, 1], vec![0, 0]);
        let flags = Flags::new(vec![0, 0], vec![2, 2]);
        let empty = PartialFilling::empty(&shape);
        assert_eq!(ee_partial(&flags, &empty).unwrap(), e_det(&shape, &flags).unwrap());
        let all: RowSet = [1, 2].into();
        assert_eq!(
            hh_partial(&flags, &empty).unwrap(),
            h_det_general(shape.outer(), shape.inner(), &flags, &all)
        );
        // here alpha is weakly increasing, alpha < beta, mu < lambda, so the
        // barred and unbarred h-determinants already agree
        assert_eq!(hh_partial(&flags, &empty).unwrap(), h_det(&shape, &flags).unwrap());

        // filling everything leaves just the weight
        let mut full = empty.clone();
        for v in [1, 1, 2] {
            full = full.extended(v);
        }
        assert_eq!(ee_partial(&flags, &full).unwrap(), full.owt());
        assert_eq!(hh_partial(&flags, &full).unwrap(), full.wt());
    }

    #[test]
    fn one_step_of_the_partial_recurrence() {
        let shape = SkewShape::new(vec![2, 1], vec![0, 0]);
        let flags = Flags::new(vec![0, 0], vec![2, 2]);
        let empty = PartialFilling::empty(&shape);
        // first cell in the fill order is (1,2); its interval is
        // alpha_1+1 ..= beta_1
        let step = |r0: &PartialFilling| {
            let mut e_sum = Polynomial::zero();
            let mut h_sum = Polynomial::zero();
            for k in 1..=2 {
                e_sum += &ee_partial(&flags, &r0.extended(k)).unwrap();
                h_sum += &hh_partial(&flags, &r0.extended(k)).unwrap();
            }
            (e_sum, h_sum)
        };
        let (e_sum, h_sum) = step(&empty);
        assert_eq!(ee_partial(&flags, &empty).unwrap(), e_sum);
        assert_eq!(hh_partial(&flags, &empty).unwrap(), h_sum);
        // and both agree with the enumeration-side partial sums
        assert_eq!(ee_partial(&flags, &empty).unwrap(), r_bar_partial(&flags, &empty).unwrap());
        assert_eq!(hh_partial(&flags, &empty).unwrap(), r_partial(&flags, &empty).unwrap());
    }

    #[test]
    fn partial_rejects_flag_violations() {
        let shape = SkewShape::new(vec![1], vec![0]);
        let tight = Flags::new(vec![2], vec![3]);
        let r0 = PartialFilling::empty(&shape).extended(1);
        // entry 1 <= alpha_1 breaks the row-flag interval
        assert!(matches!(ee_partial(&tight, &r0), Err(JtError::Filling(_))));
    }

    #[test]
    fn phi_powers_of_h() {
        let xs = x_interval(0, 2);
        assert_eq!(phi_h(0, 2, 2), h_pleth(2, &xs));
        assert_eq!(phi_h(1, 1, 1), poly("x1 + 1"));
        assert!(phi_h(3, 0, 2).is_one());
        assert!(phi_h(-2, -1, 2).is_zero());
        // phi^{-1} h_n = h_n - h_{n-1}
        assert_eq!(phi_h(-1, 3, 2), &h_pleth(3, &xs) - &h_pleth(2, &xs));
        // and phi phi^{-1} = id, checked through the defining sum
        let n = 3;
        let mut recomposed = Polynomial::zero();
        for i in 0..=n {
            recomposed += &(Polynomial::constant(binomial_ext(1 + i - 1, i)) * phi_h(-1, n - i, 2));
        }
        assert_eq!(recomposed, h_pleth(n, &xs));
    }

    #[test]
    fn dual_determinant_small_shapes() {
        let shape = SkewShape::new(vec![2, 1], vec![2, 1]);
        assert!(g_dual_via_phi(&shape, 3).unwrap().is_one());
        assert_eq!(g_dual_via_phi(&SkewShape::new(vec![1], vec![0]), 2).unwrap(), poly("x1 + x2"));
        assert_eq!(
            g_dual_via_phi(&SkewShape::new(vec![1, 1], vec![0, 0]), 2).unwrap(),
            poly("x1*x2 + x1 + x2")
        );
        // non-contained pair collapses to zero just like the enumeration
        assert!(g_dual_via_phi(&SkewShape::new(vec![1, 1], vec![2, 0]), 2).unwrap().is_zero());
    }

    #[test]
    fn binomials_extend_to_negative_tops() {
        assert_eq!(binomial_ext(4, 2), BigInt::from(6));
        assert_eq!(binomial_ext(0, 0), BigInt::one());
        assert_eq!(binomial_ext(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_ext(-3, 2), BigInt::from(6));
        assert!(binomial_ext(2, 5).is_zero());
    }
}
