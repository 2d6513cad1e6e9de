//! Exact scalars over the rationals and over prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field `k`: either `Q` or `F_p` for a word-size prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "field", try_from = "RawField")]
pub enum Field {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u32 },
}

#[derive(Deserialize)]
#[serde(tag = "field")]
enum RawField {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
}

impl TryFrom<RawField> for Field {
    type Error = Error;

    fn try_from(raw: RawField) -> Result<Self> {
        match raw {
            RawField::Rationals => Ok(Field::Rationals),
            RawField::PrimeField { p } => {
                let p = u32::try_from(p).map_err(|_| Error::InvalidField(format!("{p} is not below 2^31")))?;
                Field::prime(p)
            }
        }
    }
}

impl Field {
    /// `F_p`, checking that `p` is a prime below `2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::PrimeField { p })
    }

    /// 0 for `Q`, `p` for `F_p`.
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField { p } => *p,
        }
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: *self, right: *other })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField { p } => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `Q` (in lowest terms) or of `F_p` (residue in `[0, p)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, p: u32 },
}

/// Operation selector for [`scalar_arithmetic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Applies `op` to `a` (and `b` for binary operations).
pub fn scalar_arithmetic(op: ScalarOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let second = || b.ok_or_else(|| Error::DimensionMismatch(format!("{op:?} needs two operands")));
    match op {
        ScalarOp::Add => a.checked_add(second()?),
        ScalarOp::Mul => a.checked_mul(second()?),
        ScalarOp::Neg => Ok(-a),
        ScalarOp::Inv => a.inv(),
    }
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::PrimeField { p } => Scalar::Residue { value: n.rem_euclid(p as i64) as u32, p },
        }
    }

    pub fn from_bigint(field: Field, n: &BigInt) -> Self {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::PrimeField { p } => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Residue { value: r.to_u32().expect("residue below p"), p }
            }
        }
    }

    /// `num / den`; fails if `den` vanishes in the field.
    pub fn from_ratio(field: Field, num: &BigInt, den: &BigInt) -> Result<Self> {
        let d = Self::from_bigint(field, den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&Self::from_bigint(field, num) * &d.inv()?)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { p, .. } => Field::PrimeField { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) if p == q => {
                let s = (*a as u64 + *b as u64) % *p as u64;
                Ok(Scalar::Residue { value: s as u32, p: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) if p == q => {
                let s = (*a as u64 * *b as u64) % *p as u64;
                Ok(Scalar::Residue { value: s as u32, p: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, p } => {
                Scalar::Residue { value: pow_mod(*value as u64, *p as u64 - 2, *p as u64) as u32, p: *p }
            }
        })
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch { left: self.field(), right: other.field() }
    }

    /// Whether the printed form needs a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

// The operator impls panic on mixed fields; the checked_* methods report it.

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, p } => Scalar::Residue { value: (*p - *value) % *p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parses `"3"`, `"-3"`, or `"1/2"` into the given field.
pub fn parse_scalar(field: Field, text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid coefficient {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    Scalar::from_ratio(field, &num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(Field::Rationals, &n.into(), &d.into()).unwrap()
    }

    #[test]
    fn fraction_addition() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        let out = scalar_arithmetic(ScalarOp::Add, &q(1, 2), Some(&q(1, 3))).unwrap();
        assert_eq!(out.to_string(), "5/6");
    }

    #[test]
    fn inverse_mod_five() {
        let f5 = Field::prime(5).unwrap();
        let two = Scalar::from_i64(f5, 2);
        assert_eq!(scalar_arithmetic(ScalarOp::Inv, &two, None).unwrap(), Scalar::from_i64(f5, 3));
    }

    #[test]
    fn zero_absorbs() {
        for field in [Field::Rationals, Field::prime(7).unwrap()] {
            let zero = Scalar::zero(field);
            for x in [-4, 0, 3, 11] {
                assert!((&zero * &Scalar::from_i64(field, x)).is_zero());
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(Scalar::zero(Field::Rationals).inv(), Err(Error::DivisionByZero));
        let f5 = Field::prime(5).unwrap();
        let err = Scalar::one(Field::Rationals).checked_add(&Scalar::one(f5)).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch { .. }));
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2_147_483_647).is_ok());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(q(2, -4), q(-1, 2));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(Scalar::from_i64(f5, -1), Scalar::Residue { value: 4, p: 5 });
        assert_eq!(parse_scalar(f5, "1/2").unwrap(), Scalar::from_i64(f5, 3));
        assert!(parse_scalar(f5, "1/5").is_err());
    }

    #[test]
    fn field_json() {
        let f: Field = serde_json::from_str(r#"{"field":"Fp","p":5}"#).unwrap();
        assert_eq!(f, Field::PrimeField { p: 5 });
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"field":"Fp","p":5}"#);
        let q: Field = serde_json::from_str(r#"{"field":"Q"}"#).unwrap();
        assert_eq!(q, Field::Rationals);
        assert!(serde_json::from_str::<Field>(r#"{"field":"Fp","p":9}"#).is_err());
    }
}
