//! Exact coefficient rings: rationals and polynomials in `λ1, λ2, λ3`.
//!
//! Quaternion arithmetic is generic over [`Ring`]. The two concrete rings are
//! [`Rational`] (a numeric parameter point) and [`Poly3`] (symbolic λ).
//! [`Scalar`] is the mode-tagged dynamic value used at the serialization
//! boundary; its operations refuse to mix modes.

mod poly;
mod rational;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use poly::{Exponent, Poly3};
pub use rational::Rational;

use crate::error::{Error, Result};

/// Commutative ring with unity, containing the rationals.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const MODE: RingMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, k: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;

    fn to_scalar(&self) -> Scalar;
    fn try_from_scalar(s: Scalar) -> Result<Self>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingMode {
    Rational,
    Polynomial,
}

impl Ring for Rational {
    const MODE: RingMode = RingMode::Rational;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
    fn try_from_scalar(s: Scalar) -> Result<Self> {
        match s {
            Scalar::Rational(r) => Ok(r),
            Scalar::Poly(_) => Err(Error::RingModeMismatch),
        }
    }
}

impl Ring for Poly3 {
    const MODE: RingMode = RingMode::Polynomial;

    fn zero() -> Self {
        Poly3::zero()
    }
    fn one() -> Self {
        Poly3::one()
    }
    fn is_zero(&self) -> bool {
        Poly3::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Rational) -> Self {
        Poly3::scale(self, k)
    }
    fn from_rational(r: Rational) -> Self {
        Poly3::constant(r)
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Poly(self.clone())
    }
    fn try_from_scalar(s: Scalar) -> Result<Self> {
        match s {
            Scalar::Poly(p) => Ok(p),
            Scalar::Rational(_) => Err(Error::RingModeMismatch),
        }
    }
}

/// A scalar tagged with its ring mode.
///
/// Serializes as a rational string (`"p/q"`) or as a polynomial term list
/// (`[{"coeff": "p/q", "exp": [a, b, c]}, ...]`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Rational(Rational),
    Poly(Poly3),
}

impl Scalar {
    pub fn mode(&self) -> RingMode {
        match self {
            Scalar::Rational(_) => RingMode::Rational,
            Scalar::Poly(_) => RingMode::Polynomial,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a * b, |a, b| a * b)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Poly(a) => Scalar::Poly(-a),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Poly(a) => a.is_zero(),
        }
    }

    fn zip(
        &self,
        other: &Scalar,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        poly: impl Fn(&Poly3, &Poly3) -> Poly3,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(rat(a, b))),
            (Scalar::Poly(a), Scalar::Poly(b)) => Ok(Scalar::Poly(poly(a, b))),
            _ => Err(Error::RingModeMismatch),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt::Display::fmt(r, f),
            Scalar::Poly(p) => fmt::Display::fmt(p, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<Poly3> for Scalar {
    fn from(p: Poly3) -> Self {
        Scalar::Poly(p)
    }
}
