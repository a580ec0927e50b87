//! Signed multiplicity-free sums of variables ("alphabets") and the
//! evaluation of elementary and complete homogeneous symmetric functions on
//! them, e_k[A] and h_k[A].
//!
//! Only the signed multiplicity-free fragment of plethysm is implemented:
//! every argument that actually occurs has the form X_(r,s] + T_a - T_b.
//! Signs are resolved by
//!
//! ```text
//! e_k[A - B] = sum_i e_{k-i}[A] (-1)^i h_i[B]
//! h_k[A - B] = sum_i h_{k-i}[A] (-1)^i e_i[B]
//! ```
//!
//! and plain e_k/h_k on the variable lists handle the unsigned parts.

use crate::polyring::{Polynomial, Variable};
use std::collections::BTreeSet;
use std::fmt;

/// Sign for combining alphabets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// A formal sum of distinct variables minus another such sum, with the two
/// parts disjoint. Construction cancels overlap and rejects multiplicity two.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Alphabet {
    plus: BTreeSet<Variable>,
    minus: BTreeSet<Variable>,
}

impl Alphabet {
    pub fn empty() -> Alphabet {
        Alphabet::default()
    }

    /// Builds an alphabet from the two parts, cancelling variables common to
    /// both. A variable repeated within one part is an error: multiplicities
    /// above 1 are outside this module's fragment.
    pub fn from_parts<P, M>(plus: P, minus: M) -> Alphabet
    where
        P: IntoIterator<Item = Variable>,
        M: IntoIterator<Item = Variable>,
    {
        let mut p = BTreeSet::new();
        for v in plus {
            assert!(p.insert(v), "variable {v} repeated in an alphabet");
        }
        let mut m = BTreeSet::new();
        for v in minus {
            assert!(m.insert(v), "variable {v} repeated in an alphabet");
        }
        let common: Vec<Variable> = p.intersection(&m).copied().collect();
        for v in common {
            p.remove(&v);
            m.remove(&v);
        }
        Alphabet { plus: p, minus: m }
    }

    pub fn plus(&self) -> &BTreeSet<Variable> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeSet<Variable> {
        &self.minus
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    /// Signed union with cancellation: `a.combine(&b, Sign::Minus)` is a - b.
    /// Panics if some variable would end up with multiplicity 2.
    pub fn combine(&self, other: &Alphabet, sign: Sign) -> Alphabet {
        let (other_plus, other_minus) = match sign {
            Sign::Plus => (&other.plus, &other.minus),
            Sign::Minus => (&other.minus, &other.plus),
        };
        let mut vars: BTreeSet<Variable> = BTreeSet::new();
        vars.extend(self.plus.iter());
        vars.extend(self.minus.iter());
        vars.extend(other_plus.iter());
        vars.extend(other_minus.iter());
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for v in vars {
            let net = i32::from(self.plus.contains(&v)) - i32::from(self.minus.contains(&v))
                + i32::from(other_plus.contains(&v))
                - i32::from(other_minus.contains(&v));
            match net {
                0 => {}
                1 => {
                    plus.insert(v);
                }
                -1 => {
                    minus.insert(v);
                }
                _ => panic!("variable {v} would have multiplicity {net} in a combined alphabet"),
            }
        }
        Alphabet { plus, minus }
    }
}

// Diagnostic form: "+{x2,x3,t1}-{t4}"; the minus block is omitted when empty.
impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |set: &BTreeSet<Variable>| {
            set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, "+{{{}}}", list(&self.plus))?;
        if !self.minus.is_empty() {
            write!(f, "-{{{}}}", list(&self.minus))?;
        }
        Ok(())
    }
}

/// X_(r,s] = x_{r+1} + ... + x_s, empty when r >= s.
pub fn x_interval(r: i64, s: i64) -> Alphabet {
    if r >= s {
        return Alphabet::empty();
    }
    assert!(r >= 0, "x interval lower endpoint must be nonnegative");
    Alphabet::from_parts((r + 1..=s).map(|i| Variable::x(i as u32)), [])
}

/// T_i = t_1 + ... + t_i, empty when i <= 0.
pub fn t_prefix(i: i64) -> Alphabet {
    if i <= 0 {
        return Alphabet::empty();
    }
    Alphabet::from_parts((1..=i).map(|j| Variable::t(j as u32)), [])
}

// e_0..e_{k_max} of the listed variables, by one pass per variable.
fn elementary_table(vars: &BTreeSet<Variable>, k_max: usize) -> Vec<Polynomial> {
    let mut table = vec![Polynomial::zero(); k_max + 1];
    table[0] = Polynomial::one();
    for &v in vars {
        let xv = Polynomial::variable(v);
        for k in (1..=k_max).rev() {
            let add = &table[k - 1] * &xv;
            table[k] += &add;
        }
    }
    table
}

// h_0..h_{k_max} of the listed variables; the ascending sweep reuses the
// already-updated lower entry, which is exactly h's recursion.
fn complete_table(vars: &BTreeSet<Variable>, k_max: usize) -> Vec<Polynomial> {
    let mut table = vec![Polynomial::zero(); k_max + 1];
    table[0] = Polynomial::one();
    for &v in vars {
        let xv = Polynomial::variable(v);
        for k in 1..=k_max {
            let add = &table[k - 1] * &xv;
            table[k] += &add;
        }
    }
    table
}

fn e_signed(k: i64, plus: &BTreeSet<Variable>, minus: &BTreeSet<Variable>) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    let k = k as usize;
    if k == 0 {
        return Polynomial::one();
    }
    if minus.is_empty() {
        if k > plus.len() {
            return Polynomial::zero();
        }
        return elementary_table(plus, k)[k].clone();
    }
    // e_k[A - B] = sum_{i} e_{k-i}[A] (-1)^i h_i[B]
    let e_plus = elementary_table(plus, k.min(plus.len()));
    let h_minus = complete_table(minus, k);
    let mut out = Polynomial::zero();
    for i in 0..=k {
        if k - i >= e_plus.len() {
            continue;
        }
        let term = &e_plus[k - i] * &h_minus[i];
        if i % 2 == 0 {
            out += &term;
        } else {
            out = out - term;
        }
    }
    out
}

fn h_signed(k: i64, plus: &BTreeSet<Variable>, minus: &BTreeSet<Variable>) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    let k = k as usize;
    if k == 0 {
        return Polynomial::one();
    }
    if minus.is_empty() {
        return complete_table(plus, k)[k].clone();
    }
    // h_k[A - B] = sum_{i} h_{k-i}[A] (-1)^i e_i[B]
    let h_plus = complete_table(plus, k);
    let e_minus = elementary_table(minus, k.min(minus.len()));
    let mut out = Polynomial::zero();
    for i in 0..=k.min(minus.len()) {
        let term = &h_plus[k - i] * &e_minus[i];
        if i % 2 == 0 {
            out += &term;
        } else {
            out = out - term;
        }
    }
    out
}

/// e_k[a]: elementary symmetric function of degree k evaluated on the
/// alphabet. 1 at k = 0, 0 for k < 0, and 0 when a is a sum of fewer than k
/// variables.
pub fn e_pleth(k: i64, a: &Alphabet) -> Polynomial {
    e_signed(k, &a.plus, &a.minus)
}

/// h_k[a]: complete homogeneous analogue of [`e_pleth`].
pub fn h_pleth(k: i64, a: &Alphabet) -> Polynomial {
    h_signed(k, &a.plus, &a.minus)
}
