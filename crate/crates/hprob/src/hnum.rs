//! Exact arithmetic on the commutative ring of hyperbolic (split-complex)
//! numbers: `a + b*j` with `j*j = 1`.
//!
//! The ring splits along the complementary idempotents `e = (1 + j)/2` and
//! `e+ = (1 - j)/2`, and every element has a unique idempotent representation
//! `n1*e + n2*e+` in which addition, multiplication, and inversion all act
//! componentwise. That representation is the canonical one here; the
//! cartesian pair `(a, b)` is derived on demand via `a = (n1 + n2)/2`,
//! `b = (n1 - n2)/2`.
//!
//! Zero-divisors are exactly the nonzero elements with one vanishing
//! idempotent component, and the componentwise order `<=` on the pair gives
//! the partial order used throughout the probability layer.

use crate::rational::{parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// A hyperbolic number, stored by its idempotent components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HNum {
    e_part: Rational,
    edag_part: Rational,
}

/// Position of a hyperbolic number relative to the zero-divisor set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZdClass {
    /// Both idempotent components vanish.
    Zero,
    /// Both components are nonzero; the number has an exact inverse.
    Invertible,
    /// Nonzero multiple of `e` (the `e+`-component vanishes).
    ZdE,
    /// Nonzero multiple of `e+` (the `e`-component vanishes).
    ZdEdag,
}

impl ZdClass {
    /// True for zero and for both flavors of zero-divisor.
    pub fn is_zero_or_divisor(self) -> bool {
        !matches!(self, ZdClass::Invertible)
    }
}

/// Outcome of comparing two hyperbolic numbers under the partial order.
///
/// `x` precedes `y` when `y - x` has both idempotent components nonnegative;
/// pairs whose componentwise differences disagree in sign are `Incomparable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderRel {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl OrderRel {
    /// True when the relation witnesses `lhs <= rhs` in the partial order.
    pub fn is_less_or_equal(self) -> bool {
        matches!(self, OrderRel::Less | OrderRel::Equal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HNumError {
    #[error("{0} is not invertible")]
    NotInvertible(HNum),
    #[error("supremum of an empty collection")]
    EmptySet,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid hyperbolic number {input:?}: {reason}")]
pub struct ParseHNumError {
    pub input: String,
    pub reason: String,
}

impl HNum {
    pub fn from_parts(e_part: Rational, edag_part: Rational) -> Self {
        HNum { e_part, edag_part }
    }

    /// Builds `scalar + j_coeff*j` and converts to idempotent components.
    pub fn from_cartesian(scalar: Rational, j_coeff: Rational) -> Self {
        HNum {
            e_part: &scalar + &j_coeff,
            edag_part: scalar - j_coeff,
        }
    }

    pub fn from_real(r: Rational) -> Self {
        HNum {
            e_part: r.clone(),
            edag_part: r,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(crate::rational::rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(Rational::one())
    }

    /// The idempotent `e = (1 + j)/2`.
    pub fn e() -> Self {
        HNum {
            e_part: Rational::one(),
            edag_part: Rational::zero(),
        }
    }

    /// The complementary idempotent `e+ = (1 - j)/2`.
    pub fn edag() -> Self {
        HNum {
            e_part: Rational::zero(),
            edag_part: Rational::one(),
        }
    }

    /// The hyperbolic unit `j` (so `j*j = 1`).
    pub fn j() -> Self {
        HNum {
            e_part: Rational::one(),
            edag_part: -Rational::one(),
        }
    }

    pub fn e_part(&self) -> &Rational {
        &self.e_part
    }

    pub fn edag_part(&self) -> &Rational {
        &self.edag_part
    }

    /// Cartesian view `(a, b)` with `a + b*j` equal to this number.
    pub fn cartesian(&self) -> (Rational, Rational) {
        let two = crate::rational::rat_int(2);
        let a = (&self.e_part + &self.edag_part) / &two;
        let b = (&self.e_part - &self.edag_part) / &two;
        (a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.e_part.is_zero() && self.edag_part.is_zero()
    }

    /// Swaps the idempotent components; in cartesian terms `a + b*j -> a - b*j`.
    pub fn conj(&self) -> Self {
        HNum {
            e_part: self.edag_part.clone(),
            edag_part: self.e_part.clone(),
        }
    }

    pub fn classify(&self) -> ZdClass {
        match (self.e_part.is_zero(), self.edag_part.is_zero()) {
            (true, true) => ZdClass::Zero,
            (false, false) => ZdClass::Invertible,
            (false, true) => ZdClass::ZdE,
            (true, false) => ZdClass::ZdEdag,
        }
    }

    /// Componentwise reciprocal; fails on zero and on zero-divisors.
    pub fn inverse(&self) -> Result<Self, HNumError> {
        if self.e_part.is_zero() || self.edag_part.is_zero() {
            return Err(HNumError::NotInvertible(self.clone()));
        }
        Ok(HNum {
            e_part: self.e_part.recip(),
            edag_part: self.edag_part.recip(),
        })
    }

    /// Exact division, defined only for invertible divisors.
    pub fn checked_div(&self, rhs: &HNum) -> Result<Self, HNumError> {
        rhs.inverse().map(|inv| self * &inv)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        HNum {
            e_part: &self.e_part * r,
            edag_part: &self.edag_part * r,
        }
    }

    pub fn compare(&self, other: &HNum) -> OrderRel {
        use std::cmp::Ordering::*;
        let e = self.e_part.cmp(&other.e_part);
        let ed = self.edag_part.cmp(&other.edag_part);
        match (e, ed) {
            (Equal, Equal) => OrderRel::Equal,
            (Less | Equal, Less | Equal) => OrderRel::Less,
            (Greater | Equal, Greater | Equal) => OrderRel::Greater,
            _ => OrderRel::Incomparable,
        }
    }

    /// Membership in the nonnegative cone (both components `>= 0`).
    pub fn is_nonneg(&self) -> bool {
        !self.e_part.is_negative() && !self.edag_part.is_negative()
    }

    /// Positive and invertible: both components strictly positive.
    pub fn is_strictly_positive_invertible(&self) -> bool {
        self.e_part.is_positive() && self.edag_part.is_positive()
    }

    /// Hyperbolic-valued modulus: componentwise absolute value.
    pub fn hmod(&self) -> Self {
        HNum {
            e_part: self.e_part.abs(),
            edag_part: self.edag_part.abs(),
        }
    }

    pub fn idempotent_string(&self) -> String {
        self.to_string()
    }

    pub fn cartesian_string(&self) -> String {
        let (a, b) = self.cartesian();
        format!("{} + {}*j", a, b)
    }

    /// Both renderings joined: `"n1*e + n2*e+ = a + b*j"`.
    pub fn dual_string(&self) -> String {
        format!("{} = {}", self, self.cartesian_string())
    }
}

/// Componentwise supremum of a nonempty finite collection.
pub fn sup_d<'a, I>(values: I) -> Result<HNum, HNumError>
where
    I: IntoIterator<Item = &'a HNum>,
{
    let mut iter = values.into_iter();
    let first = iter.next().ok_or(HNumError::EmptySet)?;
    let mut e_part = first.e_part.clone();
    let mut edag_part = first.edag_part.clone();
    for v in iter {
        if v.e_part > e_part {
            e_part = v.e_part.clone();
        }
        if v.edag_part > edag_part {
            edag_part = v.edag_part.clone();
        }
    }
    Ok(HNum { e_part, edag_part })
}

impl fmt::Display for HNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e + {}*e+", self.e_part, self.edag_part)
    }
}

impl fmt::Debug for HNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HNum({})", self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<HNum> for HNum {
            type Output = HNum;
            fn $method(self, rhs: HNum) -> HNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&HNum> for HNum {
            type Output = HNum;
            fn $method(self, rhs: &HNum) -> HNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<HNum> for &HNum {
            type Output = HNum;
            fn $method(self, rhs: HNum) -> HNum {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&HNum> for &HNum {
    type Output = HNum;
    fn add(self, rhs: &HNum) -> HNum {
        HNum {
            e_part: &self.e_part + &rhs.e_part,
            edag_part: &self.edag_part + &rhs.edag_part,
        }
    }
}
forward_binop!(Add, add);

impl Sub<&HNum> for &HNum {
    type Output = HNum;
    fn sub(self, rhs: &HNum) -> HNum {
        HNum {
            e_part: &self.e_part - &rhs.e_part,
            edag_part: &self.edag_part - &rhs.edag_part,
        }
    }
}
forward_binop!(Sub, sub);

impl Mul<&HNum> for &HNum {
    type Output = HNum;
    fn mul(self, rhs: &HNum) -> HNum {
        HNum {
            e_part: &self.e_part * &rhs.e_part,
            edag_part: &self.edag_part * &rhs.edag_part,
        }
    }
}
forward_binop!(Mul, mul);

impl Neg for &HNum {
    type Output = HNum;
    fn neg(self) -> HNum {
        HNum {
            e_part: -self.e_part.clone(),
            edag_part: -self.edag_part.clone(),
        }
    }
}

impl Neg for HNum {
    type Output = HNum;
    fn neg(self) -> HNum {
        -&self
    }
}

impl std::iter::Sum for HNum {
    fn sum<I: Iterator<Item = HNum>>(iter: I) -> HNum {
        iter.fold(HNum::zero(), |acc, x| acc + x)
    }
}

// ---------------------------------------------------------------------------
// Textual forms.
//
// Idempotent: `n1*e + n2*e+`;  cartesian: `a + b*j`;  rationals per the
// grammar in `rational`. `FromStr` accepts either form, or both joined by
// `=` (in which case the halves must agree).
// ---------------------------------------------------------------------------

impl FromStr for HNum {
    type Err = ParseHNumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((lhs, rhs)) = s.split_once('=') {
            let a = parse_single(lhs)?;
            let b = parse_single(rhs)?;
            if a != b {
                return Err(ParseHNumError {
                    input: s.to_string(),
                    reason: "idempotent and cartesian halves disagree".to_string(),
                });
            }
            return Ok(a);
        }
        parse_single(s)
    }
}

fn parse_single(s: &str) -> Result<HNum, ParseHNumError> {
    if s.contains("*e") {
        parse_idempotent(s)
    } else if s.contains("*j") {
        parse_cartesian(s)
    } else {
        Err(ParseHNumError {
            input: s.to_string(),
            reason: "expected `n1*e + n2*e+` or `a + b*j`".to_string(),
        })
    }
}

fn parse_idempotent(s: &str) -> Result<HNum, ParseHNumError> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    let e_part = sc.rational()?;
    sc.expect("*e")?;
    sc.skip_ws();
    sc.expect("+")?;
    sc.skip_ws();
    let edag_part = sc.rational()?;
    sc.expect("*e+")?;
    sc.skip_ws();
    sc.end()?;
    Ok(HNum::from_parts(e_part, edag_part))
}

fn parse_cartesian(s: &str) -> Result<HNum, ParseHNumError> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    let a = sc.rational()?;
    sc.skip_ws();
    sc.expect("+")?;
    sc.skip_ws();
    let b = sc.rational()?;
    sc.expect("*j")?;
    sc.skip_ws();
    sc.end()?;
    Ok(HNum::from_cartesian(a, b))
}

struct Scanner<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner { input, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start_matches(' ');
        self.pos = self.input.len() - trimmed.len();
    }

    fn error(&self, reason: impl Into<String>) -> ParseHNumError {
        ParseHNumError {
            input: self.input.to_string(),
            reason: format!("{} at byte {}", reason.into(), self.pos),
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseHNumError> {
        if let Some(rest) = self.rest().strip_prefix(lit) {
            self.pos = self.input.len() - rest.len();
            Ok(())
        } else {
            Err(self.error(format!("expected {lit:?}")))
        }
    }

    /// Scans a maximal `[-/0-9]` run and parses it with the rational grammar.
    fn rational(&mut self) -> Result<Rational, ParseHNumError> {
        let rest = self.rest();
        let len = rest
            .bytes()
            .take_while(|b| b.is_ascii_digit() || *b == b'-' || *b == b'/')
            .count();
        if len == 0 {
            return Err(self.error("expected a rational"));
        }
        let token = &rest[..len];
        let value = parse_rational(token).map_err(|e| self.error(e.to_string()))?;
        self.pos += len;
        Ok(value)
    }

    fn end(&self) -> Result<(), ParseHNumError> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }
}
