//! Exact Laurent polynomials with integer coefficients.
//!
//! [`LaurentPoly`] is univariate in `t`; [`LaurentPoly2`] has two variables
//! `(q, t)`. Coefficients are `i128` with checked arithmetic: overflow
//! panics instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{BraidError, Result};

pub type Coeff = i128;

/// Exponent monoid of a Laurent ring.
pub trait Exponent: Copy + Ord + fmt::Debug {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
}

impl Exponent for i32 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self.checked_add(other).expect("exponent overflow")
    }
}

impl Exponent for (i32, i32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, other: Self) -> Self {
        (
            Exponent::add(self.0, other.0),
            Exponent::add(self.1, other.1),
        )
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, Coeff>,
}

pub type LaurentPoly = Laurent<i32>;
pub type LaurentPoly2 = Laurent<(i32, i32)>;

fn add_coeff(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("coefficient overflow")
}

fn mul_coeff(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("coefficient overflow")
}

impl<E: Exponent> Laurent<E> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, E::zero())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, E::zero())
    }

    pub fn monomial(c: Coeff, e: E) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (E, Coeff)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&E::zero()) == Some(&1)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: E) -> Coeff {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: E, c: Coeff) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = add_coeff(*slot, c);
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: Coeff) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, &v)| (e, mul_coeff(v, c)))
                .collect(),
        }
    }

    /// Multiplies by the monomial with exponent `e`.
    pub fn shift(&self, e: E) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&k, &v)| (k.add(e), v)).collect(),
        }
    }

    /// Adds `a * b` into `self`.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        for (&ea, &ca) in &a.terms {
            for (&eb, &cb) in &b.terms {
                self.add_term(ea.add(eb), mul_coeff(ca, cb));
            }
        }
    }
}

impl<E: Exponent> Add for &Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<E: Exponent> Sub for &Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<E: Exponent> Mul for &Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = Laurent::zero();
        out.add_product(self, rhs);
        out
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<E: Exponent> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<E: Exponent> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        (&self).neg()
    }
}

impl<E: Exponent> fmt::Debug for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl LaurentPoly {
    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `Σ coeffs[k] t^(low + k)`.
    pub fn from_coeffs(low: i32, coeffs: &[Coeff]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (low + k as i32, c)))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`, or 0 for the zero polynomial.
    pub fn degree_span(&self) -> i32 {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Coeff {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    /// Coefficient of the lowest power of `t`.
    pub fn trailing_coeff(&self) -> Coeff {
        self.terms.values().next().copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> Coeff {
        self.terms.values().fold(0, |acc, &c| add_coeff(acc, c))
    }

    /// Coefficients from lowest to highest degree, zeros included.
    pub fn dense_coeffs(&self) -> Vec<Coeff> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Vec::new();
        };
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }

    /// Exact division in `Z[t, t^-1]`. Fails when `divisor` does not divide
    /// `self` with integer coefficients.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(BraidError::Internal("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let d_hi = divisor.max_degree().unwrap();
        let d_lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let floor = self.min_degree().unwrap() - divisor.min_degree().unwrap();
        while let Some(r_hi) = rem.max_degree() {
            let shift = r_hi - d_hi;
            let lead = rem.leading_coeff();
            if shift < floor || lead % d_lead != 0 {
                return Err(BraidError::Internal(format!(
                    "{self} is not divisible by {divisor}"
                )));
            }
            let c = lead / d_lead;
            quot.add_term(shift, c);
            rem = &rem - &divisor.shift(shift).scale(c);
        }
        Ok(quot)
    }

    /// `t ↦ t^{-1}`.
    pub fn mirror(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }
}

/// `2*t^2 - 3*t + 2`: descending exponents, explicit signs, unit
/// coefficients omitted on non-constant terms.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl LaurentPoly2 {
    pub fn q() -> Self {
        Self::monomial(1, (1, 0))
    }

    pub fn t() -> Self {
        Self::monomial(1, (0, 1))
    }

    /// `c q^a t^b`.
    pub fn qt(c: Coeff, a: i32, b: i32) -> Self {
        Self::monomial(c, (a, b))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((a, b), c)) in self.terms().rev().enumerate() {
            if k > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}*q^{a}*t^{b}", c.unsigned_abs())?;
        }
        Ok(())
    }
}
