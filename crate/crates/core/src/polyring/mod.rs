//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is
//! graded lexicographic, so two polynomials are equal exactly when their
//! canonical forms are.

mod matrix;
mod symmetric;

pub use matrix::FormalMatrix;
pub use symmetric::complete_homogeneous;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which family of variables a polynomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Alphabet {
    /// `x_1, .., x_N`.
    X { nvars: u32 },
    /// Formal complete homogeneous symbols `h_1, h_2, ..` (`h_0 = 1`).
    H,
    /// Matrix entries `a_{i,j}`, variable id `(i-1)*cols + j`.
    Entry { cols: u32 },
}

impl Alphabet {
    fn var_name(&self, v: u32) -> String {
        match *self {
            Alphabet::X { .. } => format!("x{v}"),
            Alphabet::H => format!("h{v}"),
            Alphabet::Entry { cols } => {
                let (i, j) = ((v - 1) / cols + 1, (v - 1) % cols + 1);
                format!("a{i}_{j}")
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::X { nvars } => write!(f, "x[1..{nvars}]"),
            Alphabet::H => write!(f, "h"),
            Alphabet::Entry { cols } => write!(f, "a[*,1..{cols}]"),
        }
    }
}

/// A product of variables; exponents are stored sparsely by ascending
/// variable id and are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: u32) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds from `(variable, exponent)` pairs in any order; zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial { exps: map.into_iter().filter(|&(_, e)| e > 0).collect() }
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(var, _)| var)
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn max_var(&self) -> Option<u32> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&t), None) => {
                    out.push(t);
                    a.next();
                }
                (None, Some(&&t)) => {
                    out.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.exps.is_empty() {
            return "1".into();
        }
        let factors: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                let name = alphabet.var_name(v);
                if e == 1 { name } else { format!("{name}^{e}") }
            })
            .collect();
        factors.join("*")
    }
}

impl Ord for Monomial {
    /// Total degree first, then lexicographic on exponent vectors read from
    /// the lowest variable id: `x1^2*x2 > x1*x2^2`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut a, mut b) = (self.exps.iter(), other.exps.iter());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            // the one mentioning the smaller variable is larger
                            return vb.cmp(&va);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(alphabet: Alphabet) -> Self {
        Polynomial { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Polynomial::constant(alphabet, 1)
    }

    pub fn constant(alphabet: Alphabet, c: impl Into<BigInt>) -> Self {
        Polynomial::from_terms(alphabet, [(Monomial::one(), c.into())])
    }

    pub fn var(alphabet: Alphabet, v: u32) -> Self {
        Polynomial::from_terms(alphabet, [(Monomial::var(v), BigInt::one())])
    }

    /// The entry variable `a_{i,j}` (1-based) of an `Entry` alphabet.
    pub fn entry_var(cols: u32, i: u32, j: u32) -> Self {
        Polynomial::var(Alphabet::Entry { cols }, (i - 1) * cols + j)
    }

    pub fn monomial(alphabet: Alphabet, m: Monomial) -> Self {
        Polynomial::from_terms(alphabet, [(m, BigInt::one())])
    }

    /// Sums the given terms, merging equal monomials and dropping zeros.
    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { alphabet, terms: map }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(self.alphabet.to_string(), other.alphabet.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { alphabet: self.alphabet, terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *terms.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { alphabet: self.alphabet, terms })
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.alphabet);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Polynomial { alphabet: self.alphabet, terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(self.alphabet), |acc, _| &acc * self)
    }

    /// Replaces every variable `v` by `image(v)`, which must lie in `target`.
    pub fn substitute(&self, target: Alphabet, image: impl Fn(u32) -> Polynomial) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(target);
        let mut cache: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for &(v, e) in m.exponents() {
                let base = cache.entry(v).or_insert_with(|| image(v));
                term = term.try_mul(&base.pow(e))?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Largest monomial (in canonical order) whose coefficients differ, if any.
    pub fn first_difference(&self, other: &Polynomial) -> Option<Monomial> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().rev().find(|m| self.coefficient(m) != other.coefficient(m)).cloned()
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.alphabet)
    }
}

impl fmt::Display for Polynomial {
    /// Terms from the largest monomial down, e.g. `x1^2*x2 + x1*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.render(&self.alphabet))?;
            } else {
                write!(f, "{mag}*{}", m.render(&self.alphabet))?;
            }
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { alphabet: self.alphabet, terms }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on alphabet mismatch; use [`Polynomial::try_add`] to handle it.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const X2: Alphabet = Alphabet::X { nvars: 2 };
    const X3: Alphabet = Alphabet::X { nvars: 3 };

    fn x(v: u32) -> Polynomial {
        Polynomial::var(X2, v)
    }

    #[test]
    fn addition_basics() {
        assert_eq!((&x(1) + &x(2)).to_string(), "x1 + x2");
        let zero = Polynomial::zero(X2);
        assert_eq!(&x(1) + &zero, x(1));
        let m = &x(1) * &x(2);
        let cancelled = &m + &(-&m);
        assert!(cancelled.is_zero());
        assert_eq!(cancelled.term_count(), 0);
    }

    #[test]
    fn multiplication_basics() {
        let s = &x(1) + &x(2);
        assert_eq!((&s * &s).to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(&s * &Polynomial::one(X2), s);
        let d = &x(1) - &x(2);
        assert_eq!((&d * &s).to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = Polynomial::var(X2, 1);
        let b = Polynomial::var(Alphabet::H, 1);
        assert!(matches!(a.try_add(&b), Err(Error::AlphabetMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(Error::AlphabetMismatch(..))));
        assert!(a.try_add(&Polynomial::var(X3, 1)).is_err());
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let p = &(&x(1) * &x(1)) * &x(2);
        let q = &(&x(2) * &x(2)) * &x(1);
        assert_eq!((&q + &p).to_string(), "x1^2*x2 + x1*x2^2");
        let mixed = &(&p + &x(1)) + &Polynomial::constant(X2, -3);
        assert_eq!(mixed.to_string(), "x1^2*x2 + x1 - 3");
        assert!(Monomial::var(1) > Monomial::var(2));
        assert!(Monomial::from_pairs([(2, 2)]) > Monomial::var(1));
    }

    #[test]
    fn entry_variables_render() {
        let a = Polynomial::entry_var(3, 2, 3);
        assert_eq!(a.to_string(), "a2_3");
        assert_eq!((-&a).to_string(), "-a2_3");
    }

    #[test]
    fn substitution() {
        // a_{1,1} -> x1 + x2, a_{1,2} -> x1
        let cols = 2;
        let p = &Polynomial::entry_var(cols, 1, 1) * &Polynomial::entry_var(cols, 1, 2);
        let out = p
            .substitute(X2, |v| if v == 1 { &x(1) + &x(2) } else { x(1) })
            .unwrap();
        assert_eq!(out.to_string(), "x1^2 + x1*x2");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|terms| {
            Polynomial::from_terms(
                X2,
                terms.into_iter().map(|(a, b, c)| (Monomial::from_pairs([(1, a), (2, b)]), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
