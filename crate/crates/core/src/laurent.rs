//! Laurent polynomials in `k[t, t^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field, Scalar};

/// A Laurent polynomial with exact coefficients. No stored coefficient is zero,
/// so the zero polynomial has an empty term map and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<i64, Scalar>,
}

/// The subrings and unit groups of `k[t, t^-1]` used to describe gauge groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    /// `k[t]`
    PolyInT,
    /// `k[t^-1]`
    PolyInTInv,
    /// `k^*`
    ConstUnit,
    /// `c * t^d` with `c != 0`
    MonomialUnit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaurentOp {
    Add,
    Mul,
    Neg,
}

pub fn laurent_arithmetic(op: LaurentOp, a: &LaurentPoly, b: Option<&LaurentPoly>) -> Result<LaurentPoly> {
    let second = || b.ok_or_else(|| Error::DimensionMismatch(format!("{op:?} needs two operands")));
    match op {
        LaurentOp::Add => a.checked_add(second()?),
        LaurentOp::Mul => a.checked_mul(second()?),
        LaurentOp::Neg => Ok(-a),
    }
}

pub fn ring_membership(p: &LaurentPoly, ring: Ring) -> bool {
    p.is_in(ring)
}

impl LaurentPoly {
    pub fn zero(field: Field) -> Self {
        LaurentPoly { field, terms: BTreeMap::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(Scalar::one(field), 0)
    }

    /// `c * t^e`; zero if `c` is zero.
    pub fn monomial(c: Scalar, e: i64) -> Self {
        let mut p = Self::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn t_power(field: Field, e: i64) -> Self {
        Self::monomial(Scalar::one(field), e)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_i64(field: Field, c: i64) -> Self {
        Self::constant(Scalar::from_i64(field, c))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (i64, Scalar)>) -> Result<Self> {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            field.ensure_same(&c.field())?;
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Scalar::is_one)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The pair `(c, d)` if this is a single term `c * t^d`.
    pub fn as_monomial(&self) -> Option<(&Scalar, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn is_in(&self, ring: Ring) -> bool {
        match ring {
            Ring::PolyInT => self.min_exp().is_none_or(|e| e >= 0),
            Ring::PolyInTInv => self.max_exp().is_none_or(|e| e <= 0),
            Ring::ConstUnit => matches!(self.as_monomial(), Some((_, 0))),
            Ring::MonomialUnit => self.as_monomial().is_some(),
        }
    }

    pub(crate) fn add_term(&mut self, e: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.field.ensure_same(&other.field)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.field.ensure_same(&other.field)?;
        let mut out = Self::zero(self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        LaurentPoly { field: self.field, terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { field: self.field, terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `t -> t^-1`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly { field: self.field, terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("laurent field mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(&-rhs).expect("laurent field mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("laurent field mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { field: self.field, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing exponent order, e.g. `3*t^2 - 1/2*t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let power = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if power.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{abs}*{power}")?;
            }
        }
        Ok(())
    }
}

/// Parses the text form (`"3*t^2 - 1/2*t^-1"`, `"t^-1"`, `"1 + t"`) over `field`.
pub fn parse_laurent(field: Field, text: &str) -> Result<LaurentPoly> {
    TermParser { src: text, chars: text.char_indices().peekable(), field }.parse()
}

struct TermParser<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    field: Field,
}

impl TermParser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in Laurent polynomial {:?}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
        }
        (!s.is_empty()).then_some(s)
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut poly = LaurentPoly::zero(self.field);
        self.skip_ws();
        if self.chars.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut negative = false;
            match self.chars.peek() {
                None if !first => break,
                Some((_, '+')) if !first => {
                    self.chars.next();
                }
                Some((_, '-')) => {
                    self.chars.next();
                    negative = true;
                }
                Some(_) if first => {}
                _ => return Err(self.err("expected '+' or '-'")),
            }
            first = false;
            self.skip_ws();
            let (e, c) = self.term()?;
            poly.add_term(e, &if negative { -c } else { c });
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(i64, Scalar)> {
        let coeff = match self.digits() {
            Some(num) => {
                let mut text = num;
                self.skip_ws();
                if self.chars.next_if(|(_, c)| *c == '/').is_some() {
                    self.skip_ws();
                    let den = self.digits().ok_or_else(|| self.err("missing denominator"))?;
                    text = format!("{text}/{den}");
                }
                self.skip_ws();
                if self.chars.next_if(|(_, c)| *c == '*').is_none() {
                    return Ok((0, parse_scalar(self.field, &text)?));
                }
                self.skip_ws();
                parse_scalar(self.field, &text)?
            }
            None => Scalar::one(self.field),
        };
        if self.chars.next_if(|(_, c)| *c == 't').is_none() {
            return Err(self.err("expected 't'"));
        }
        self.skip_ws();
        if self.chars.next_if(|(_, c)| *c == '^').is_none() {
            return Ok((1, coeff));
        }
        self.skip_ws();
        let sign = if self.chars.next_if(|(_, c)| *c == '-').is_some() { -1 } else { 1 };
        let digits = self.digits().ok_or_else(|| self.err("missing exponent"))?;
        let e: BigInt = digits.parse().map_err(|_| self.err("bad exponent"))?;
        let e = i64::try_from(e).map_err(|_| self.err("exponent out of range"))?;
        Ok((sign * e, coeff))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses over `Q`; use [`parse_laurent`] for other fields.
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(Field::Rationals, s)
    }
}
