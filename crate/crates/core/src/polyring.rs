//! Sparse multivariate polynomial ring over arbitrary-precision integers in
//! the two indexed variable families x1, x2, ... and t1, t2, ...
//!
//! Values are canonical (no zero coefficients, no zero exponents), so
//! structural equality is ring equality. All identity checking downstream
//! relies on that.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

/// The two variable families. Every x precedes every t in the variable order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    X,
    T,
}

/// An indexed variable, `x3` or `t2`. Indices start at 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    pub family: Family,
    pub index: u32,
}

impl Variable {
    pub fn x(index: u32) -> Variable {
        assert!(index >= 1, "variable index must be >= 1");
        Variable { family: Family::X, index }
    }

    pub fn t(index: u32) -> Variable {
        assert!(index >= 1, "variable index must be >= 1");
        Variable { family: Family::T, index }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::X => 'x',
            Family::T => 't',
        };
        write!(f, "{}{}", letter, self.index)
    }
}

/// A power product of variables with positive exponents; the empty product
/// is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<Variable, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial { exps: BTreeMap::from([(v, 1)]) }
    }

    /// Builds a monomial from (variable, exponent) pairs, summing repeats and
    /// dropping zero exponents.
    pub fn from_exponents<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Monomial {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.values().map(|&e| u64::from(e)).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    // Degree first, then lexicographic in the variable order: of two monomials
    // with equal degree, the larger is the one with the higher exponent at the
    // first variable where they differ. Canonical printing walks this order
    // downward.
    fn cmp(&self, other: &Self) -> Ordering {
        let deg = self.degree().cmp(&other.degree());
        if deg != Ordering::Equal {
            return deg;
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                // The side that still has variables is nonzero at a spot where
                // the other is zero, hence lex-greater.
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => {
                    if va != vb {
                        // The smaller variable is the first point of difference;
                        // whoever holds it is lex-greater.
                        return if va < vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(eb);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&v, &e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with BigInt coefficients, kept in canonical form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Values for the t-variables in a specialization; only 0 and 1 occur.
#[derive(Clone, Debug, Default)]
pub struct TAssignment {
    values: BTreeMap<u32, u8>,
    default: Option<u8>,
}

impl TAssignment {
    /// Assigns `value` to every t-variable.
    pub fn uniform(value: u8) -> TAssignment {
        assert!(value <= 1, "t substitution values must be 0 or 1");
        TAssignment { values: BTreeMap::new(), default: Some(value) }
    }

    pub fn new() -> TAssignment {
        TAssignment::default()
    }

    pub fn set(mut self, index: u32, value: u8) -> TAssignment {
        assert!(value <= 1, "t substitution values must be 0 or 1");
        self.values.insert(index, value);
        self
    }

    pub fn with_default(mut self, value: u8) -> TAssignment {
        assert!(value <= 1, "t substitution values must be 0 or 1");
        self.default = Some(value);
        self
    }

    fn lookup(&self, index: u32) -> Option<u8> {
        self.values.get(&index).copied().or(self.default)
    }
}

/// A t-variable of the polynomial had no assigned value and no default.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
#[error("no value assigned for t{index} and no default declared")]
pub struct MissingAssignment {
    pub index: u32,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Polynomial {
        Polynomial::monomial(Monomial::one(), c)
    }

    pub fn variable(v: Variable) -> Polynomial {
        Polynomial::monomial(Monomial::var(v), 1)
    }

    pub fn monomial<C: Into<BigInt>>(m: Monomial, c: C) -> Polynomial {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Replaces each t-variable by its assigned 0/1 value; x-variables are
    /// untouched.
    pub fn substitute_t(&self, assignment: &TAssignment) -> Result<Polynomial, MissingAssignment> {
        let mut out = Polynomial::zero();
        'term: for (m, c) in &self.terms {
            let mut kept = Vec::new();
            for (v, e) in m.exponents() {
                match v.family {
                    Family::X => kept.push((v, e)),
                    Family::T => match assignment.lookup(v.index) {
                        None => return Err(MissingAssignment { index: v.index }),
                        Some(0) => continue 'term,
                        Some(_) => {}
                    },
                }
            }
            out.insert_term(Monomial::from_exponents(kept), c.clone());
        }
        Ok(out)
    }

    /// Sends every t_i to t_{i+k}; a ring homomorphism, identity at k = 0.
    pub fn shift_t(&self, k: u32) -> Polynomial {
        self.map_variables(|v| match v.family {
            Family::T => Variable::t(v.index + k),
            Family::X => v,
        })
    }

    /// Applies a variable renaming to every term. The result is
    /// re-canonicalized, so non-injective maps are handled by coefficient
    /// addition.
    pub fn map_variables<F: Fn(Variable) -> Variable>(&self, f: F) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let renamed = Monomial::from_exponents(m.exponents().map(|(v, e)| (f(v), e)));
            out.insert_term(renamed, c.clone());
        }
        out
    }

    /// Deterministic rendering: terms by descending degree, then descending
    /// lexicographic order, like "2*x1^2*t1 - x2 + 1". The zero polynomial is
    /// "0".
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&m.to_string());
            }
        }
        out
    }

    /// JSON form with terms in canonical (descending) order:
    /// `{"terms":[{"coeff":"-1","x":{"1":2},"t":{}}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut terms = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut xs = serde_json::Map::new();
            let mut ts = serde_json::Map::new();
            for (v, e) in m.exponents() {
                let entry = serde_json::Value::from(e);
                match v.family {
                    Family::X => xs.insert(v.index.to_string(), entry),
                    Family::T => ts.insert(v.index.to_string(), entry),
                };
            }
            terms.push(serde_json::json!({
                "coeff": c.to_string(),
                "x": xs,
                "t": ts,
            }));
        }
        serde_json::json!({ "terms": terms })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), c.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Parse failure for the canonical text format.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("invalid polynomial at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

// Parser for the canonical format, used by round-trip tests and the CLI. It
// accepts exactly the grammar canonical_string emits, with flexible
// whitespace.
impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Polynomial, ParseError> {
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let err = |pos: usize, message: &str| ParseError { position: pos, message: message.to_string() };

        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_uint = |pos: &mut usize| -> Option<String> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (*pos > start).then(|| s[start..*pos].to_string())
        };

        let mut poly = Polynomial::zero();
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(pos, "empty input"));
        }
        let mut first = true;
        loop {
            // sign
            let mut negative = false;
            skip_ws(&mut pos);
            if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                negative = bytes[pos] == b'-';
                pos += 1;
                skip_ws(&mut pos);
            } else if !first {
                return Err(err(pos, "expected '+' or '-' between terms"));
            }
            first = false;

            // term: [coeff] [* factor]* | factor [* factor]*
            let mut coeff: Option<BigInt> = None;
            let mut exps: Vec<(Variable, u32)> = Vec::new();
            let mut saw_factor = false;
            loop {
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    if coeff.is_some() || saw_factor {
                        return Err(err(pos, "unexpected number"));
                    }
                    let digits = read_uint(&mut pos).unwrap();
                    coeff = Some(BigInt::from_str(&digits).unwrap());
                } else if pos < bytes.len() && (bytes[pos] == b'x' || bytes[pos] == b't') {
                    let family = if bytes[pos] == b'x' { Family::X } else { Family::T };
                    pos += 1;
                    let idx_pos = pos;
                    let digits = read_uint(&mut pos).ok_or_else(|| err(idx_pos, "expected variable index"))?;
                    let index: u32 = digits.parse().map_err(|_| err(idx_pos, "variable index out of range"))?;
                    if index == 0 {
                        return Err(err(idx_pos, "variable index must be >= 1"));
                    }
                    let mut exp = 1u32;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        let exp_pos = pos;
                        let digits = read_uint(&mut pos).ok_or_else(|| err(exp_pos, "expected exponent"))?;
                        exp = digits.parse().map_err(|_| err(exp_pos, "exponent out of range"))?;
                    }
                    exps.push((Variable { family, index }, exp));
                    saw_factor = true;
                } else {
                    return Err(err(pos, "expected a coefficient or variable"));
                }
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            poly.insert_term(Monomial::from_exponents(exps), c);

            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Ok(poly);
            }
            if bytes[pos] != b'+' && bytes[pos] != b'-' {
                return Err(err(pos, "trailing input"));
            }
        }
    }
}
