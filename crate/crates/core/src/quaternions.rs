//! The 3-parameter generalized quaternion algebra `H_{λ1,λ2,λ3}`.
//!
//! Basis `{1, e1, e2, e3}` with
//!
//! ```text
//! e1² = -λ1λ2    e2² = -λ1λ3    e3² = -λ2λ3
//! e1e2 = -e2e1 = λ1 e3
//! e1e3 = -e3e1 = -λ2 e2
//! e2e3 = -e3e2 = λ3 e1
//! ```
//!
//! Every quaternion carries its [`LambdaSig`]; combining quaternions from
//! different algebras is an error (`checked_*`) or a panic (operators).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{Poly3, Rational, Ring, Scalar};

#[derive(Debug, PartialEq)]
struct SigInner<S> {
    lambda: [S; 3],
    l12: S,
    l13: S,
    l23: S,
}

/// The parameter triple `(λ1, λ2, λ3)` of one algebra instance.
#[derive(Debug, Clone)]
pub struct LambdaSig<S: Ring>(Arc<SigInner<S>>);

impl<S: Ring> LambdaSig<S> {
    pub fn new(l1: S, l2: S, l3: S) -> Self {
        let l12 = l1.mul(&l2);
        let l13 = l1.mul(&l3);
        let l23 = l2.mul(&l3);
        LambdaSig(Arc::new(SigInner {
            lambda: [l1, l2, l3],
            l12,
            l13,
            l23,
        }))
    }

    pub fn lambda(&self) -> &[S; 3] {
        &self.0.lambda
    }

    pub fn from_scalars(l1: Scalar, l2: Scalar, l3: Scalar) -> Result<Self> {
        Ok(LambdaSig::new(
            S::try_from_scalar(l1)?,
            S::try_from_scalar(l2)?,
            S::try_from_scalar(l3)?,
        ))
    }

    pub fn to_scalars(&self) -> [Scalar; 3] {
        self.0.lambda.each_ref().map(Ring::to_scalar)
    }
}

impl LambdaSig<Poly3> {
    /// `λ1, λ2, λ3` as indeterminates; identities checked here hold for all λ.
    pub fn symbolic() -> Self {
        LambdaSig::new(Poly3::var(0), Poly3::var(1), Poly3::var(2))
    }
}

impl LambdaSig<Rational> {
    pub fn point(point: [Rational; 3]) -> Self {
        let [a, b, c] = point;
        LambdaSig::new(a, b, c)
    }

    pub fn from_ints(l1: i64, l2: i64, l3: i64) -> Self {
        LambdaSig::new(l1.into(), l2.into(), l3.into())
    }
}

impl<S: Ring> PartialEq for LambdaSig<S> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.lambda == other.0.lambda
    }
}

impl<S: Ring> fmt::Display for LambdaSig<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0.lambda;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Named rows of the table of special cases.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecialSig {
    /// `(1, λ2, λ3)`.
    Generalized(Rational, Rational),
    /// `(1, 1, -1)`.
    Split,
    /// `(1, 1, 1)`.
    Hamilton,
    /// `(1, 1, 0)`.
    Semi,
    /// `(1, -1, 0)`.
    SplitSemi,
}

impl SpecialSig {
    /// The four fixed rows, in table order.
    pub const FIXED: [SpecialSig; 4] = [
        SpecialSig::Split,
        SpecialSig::Hamilton,
        SpecialSig::Semi,
        SpecialSig::SplitSemi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SpecialSig::Generalized(..) => "generalized",
            SpecialSig::Split => "split",
            SpecialSig::Hamilton => "hamilton",
            SpecialSig::Semi => "semi",
            SpecialSig::SplitSemi => "split_semi",
        }
    }

    pub fn lambda(&self) -> [Rational; 3] {
        let t = |a: i64, b: i64, c: i64| [a.into(), b.into(), c.into()];
        match self {
            SpecialSig::Generalized(l2, l3) => [Rational::one(), l2.clone(), l3.clone()],
            SpecialSig::Split => t(1, 1, -1),
            SpecialSig::Hamilton => t(1, 1, 1),
            SpecialSig::Semi => t(1, 1, 0),
            SpecialSig::SplitSemi => t(1, -1, 0),
        }
    }
}

pub fn special_sig(kind: &SpecialSig) -> LambdaSig<Rational> {
    LambdaSig::point(kind.lambda())
}

/// `s + c1 e1 + c2 e2 + c3 e3` over the algebra `sig`.
#[derive(Debug, Clone)]
pub struct Quaternion<S: Ring> {
    sig: LambdaSig<S>,
    coeffs: [S; 4],
}

impl<S: Ring> Quaternion<S> {
    pub fn new(sig: &LambdaSig<S>, s: S, c1: S, c2: S, c3: S) -> Self {
        Quaternion {
            sig: sig.clone(),
            coeffs: [s, c1, c2, c3],
        }
    }

    /// Builds a quaternion with rational coefficients embedded into the ring.
    pub fn from_rationals(sig: &LambdaSig<S>, coeffs: [Rational; 4]) -> Self {
        Quaternion {
            sig: sig.clone(),
            coeffs: coeffs.map(S::from_rational),
        }
    }

    pub fn from_ints(sig: &LambdaSig<S>, coeffs: [i64; 4]) -> Self {
        Quaternion::from_rationals(sig, coeffs.map(Rational::from))
    }

    /// Builds from mode-tagged scalars, rejecting any that do not match `S`.
    pub fn from_scalars(sig: &LambdaSig<S>, s: Scalar, c1: Scalar, c2: Scalar, c3: Scalar) -> Result<Self> {
        Ok(Quaternion::new(
            sig,
            S::try_from_scalar(s)?,
            S::try_from_scalar(c1)?,
            S::try_from_scalar(c2)?,
            S::try_from_scalar(c3)?,
        ))
    }

    pub fn zero(sig: &LambdaSig<S>) -> Self {
        Quaternion::new(sig, S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one(sig: &LambdaSig<S>) -> Self {
        Quaternion::new(sig, S::one(), S::zero(), S::zero(), S::zero())
    }

    /// Basis element: 0 → 1, 1 → e1, 2 → e2, 3 → e3.
    pub fn basis(sig: &LambdaSig<S>, i: usize) -> Self {
        let mut q = Quaternion::zero(sig);
        q.coeffs[i] = S::one();
        q
    }

    /// Embeds a scalar as `k·1`.
    pub fn scalar(sig: &LambdaSig<S>, k: S) -> Self {
        Quaternion::new(sig, k, S::zero(), S::zero(), S::zero())
    }

    pub fn sig(&self) -> &LambdaSig<S> {
        &self.sig
    }

    pub fn coeffs(&self) -> &[S; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let [a0, a1, a2, a3] = &self.coeffs;
        let [b0, b1, b2, b3] = &other.coeffs;
        Quaternion {
            sig: self.sig.clone(),
            coeffs: [f(a0, b0), f(a1, b1), f(a2, b2), f(a3, b3)],
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.zip(other, S::add))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.zip(other, S::sub))
    }

    /// The product expanded by bilinearity over the basis rules.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let sig = &self.sig.0;
        let [l1, l2, l3] = &sig.lambda;
        let [p0, p1, p2, p3] = &self.coeffs;
        let [q0, q1, q2, q3] = &other.coeffs;
        let s = p0
            .mul(q0)
            .sub(&sig.l12.mul(&p1.mul(q1)))
            .sub(&sig.l13.mul(&p2.mul(q2)))
            .sub(&sig.l23.mul(&p3.mul(q3)));
        let c1 = p0.mul(q1).add(&p1.mul(q0)).add(&l3.mul(&p2.mul(q3).sub(&p3.mul(q2))));
        let c2 = p0.mul(q2).add(&p2.mul(q0)).add(&l2.mul(&p3.mul(q1).sub(&p1.mul(q3))));
        let c3 = p0.mul(q3).add(&p3.mul(q0)).add(&l1.mul(&p1.mul(q2).sub(&p2.mul(q1))));
        Ok(Quaternion {
            sig: self.sig.clone(),
            coeffs: [s, c1, c2, c3],
        })
    }

    pub fn scale(&self, k: &S) -> Self {
        Quaternion {
            sig: self.sig.clone(),
            coeffs: self.coeffs.each_ref().map(|c| k.mul(c)),
        }
    }

    pub fn scale_rat(&self, k: &Rational) -> Self {
        Quaternion {
            sig: self.sig.clone(),
            coeffs: self.coeffs.each_ref().map(|c| c.scale(k)),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        match k {
            0 => Quaternion::zero(&self.sig),
            1 => self.clone(),
            -1 => -self,
            _ => self.scale_rat(&Rational::from(k)),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn to_record(&self) -> QuaternionRecord {
        let [s, e1, e2, e3] = self.coeffs.each_ref().map(Ring::to_scalar);
        QuaternionRecord {
            lambda: self.sig.to_scalars(),
            s,
            e1,
            e2,
            e3,
        }
    }

    pub fn from_record(record: &QuaternionRecord) -> Result<Self> {
        let [a, b, c] = record.lambda.clone();
        let sig = LambdaSig::from_scalars(a, b, c)?;
        Quaternion::from_scalars(
            &sig,
            record.s.clone(),
            record.e1.clone(),
            record.e2.clone(),
            record.e3.clone(),
        )
    }
}

impl<S: Ring> PartialEq for Quaternion<S> {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.coeffs == other.coeffs
    }
}

impl<S: Ring> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [s, c1, c2, c3] = &self.coeffs;
        write!(f, "({s}) + ({c1})e1 + ({c2})e2 + ({c3})e3")
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics with "algebra mismatch" if the operands carry different λ.
        impl<S: Ring> $tr<&Quaternion<S>> for &Quaternion<S> {
            type Output = Quaternion<S>;
            fn $method(self, rhs: &Quaternion<S>) -> Quaternion<S> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<S: Ring> $tr for Quaternion<S> {
            type Output = Quaternion<S>;
            fn $method(self, rhs: Quaternion<S>) -> Quaternion<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl<S: Ring> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion {
            sig: self.sig.clone(),
            coeffs: self.coeffs.each_ref().map(Ring::neg),
        }
    }
}

impl<S: Ring> Neg for Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        -&self
    }
}

/// JSON form `{"lambda": [s, s, s], "s": s, "e1": s, "e2": s, "e3": s}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuaternionRecord {
    pub lambda: [Scalar; 3],
    pub s: Scalar,
    pub e1: Scalar,
    pub e2: Scalar,
    pub e3: Scalar,
}

/// Named quaternions used by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedConstant {
    /// `1 + 2e1 + 4e2 + 8e3`
    Theta,
    /// `1 + 2e1 - 3e2 + e3`
    A,
    /// `2 - 3e1 + e2 + 2e3`
    B,
    /// `1 - 2e1 + e2 + e3`
    C,
    /// `-2 + e1 + e2 - 2e3`
    D,
    /// `λ3 e1 + λ2 e2 + λ1 e3`
    Omega,
    /// `2 + 6λ1λ2 + 3λ1λ3 - 2λ2λ3 + e1 - 5e2 + 4e3`
    Psi,
    /// `-2 + 2λ1λ2 - λ1λ3 + 2λ2λ3 + 5e1 - e2 - 4e3`
    Phi,
    /// `A² + AB + B²`
    Xi,
    /// `C² + CD + D²`
    XiStar,
}

impl NamedConstant {
    pub const ALL: [NamedConstant; 10] = [
        NamedConstant::Theta,
        NamedConstant::A,
        NamedConstant::B,
        NamedConstant::C,
        NamedConstant::D,
        NamedConstant::Omega,
        NamedConstant::Psi,
        NamedConstant::Phi,
        NamedConstant::Xi,
        NamedConstant::XiStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedConstant::Theta => "Theta",
            NamedConstant::A => "A",
            NamedConstant::B => "B",
            NamedConstant::C => "C",
            NamedConstant::D => "D",
            NamedConstant::Omega => "Omega",
            NamedConstant::Psi => "Psi",
            NamedConstant::Phi => "Phi",
            NamedConstant::Xi => "Xi",
            NamedConstant::XiStar => "Xi*",
        }
    }
}

impl FromStr for NamedConstant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Theta" | "Θ" | "theta" => NamedConstant::Theta,
            "A" => NamedConstant::A,
            "B" => NamedConstant::B,
            "C" => NamedConstant::C,
            "D" => NamedConstant::D,
            "Omega" | "Ω" | "omega" => NamedConstant::Omega,
            "Psi" | "Ψ" | "psi" => NamedConstant::Psi,
            "Phi" | "Φ" | "phi" => NamedConstant::Phi,
            "Xi" | "Ξ" | "xi" => NamedConstant::Xi,
            "Xi*" | "Ξ*" | "xi*" | "XiStar" | "xi_star" => NamedConstant::XiStar,
            _ => return Err(Error::UnknownConstant(s.to_string())),
        })
    }
}

/// The constant's value in the algebra `sig`.
pub fn named_constant<S: Ring>(name: NamedConstant, sig: &LambdaSig<S>) -> Quaternion<S> {
    let q = |c: [i64; 4]| Quaternion::from_ints(sig, c);
    let [l1, l2, l3] = sig.lambda().clone();
    let sig_inner = &sig.0;
    let k = |n: i64| S::from_rational(n.into());
    match name {
        NamedConstant::Theta => q([1, 2, 4, 8]),
        NamedConstant::A => q([1, 2, -3, 1]),
        NamedConstant::B => q([2, -3, 1, 2]),
        NamedConstant::C => q([1, -2, 1, 1]),
        NamedConstant::D => q([-2, 1, 1, -2]),
        NamedConstant::Omega => Quaternion::new(sig, S::zero(), l3, l2, l1),
        NamedConstant::Psi => {
            let s = k(2)
                .add(&sig_inner.l12.scale(&6.into()))
                .add(&sig_inner.l13.scale(&3.into()))
                .sub(&sig_inner.l23.scale(&2.into()));
            Quaternion::new(sig, s, k(1), k(-5), k(4))
        }
        NamedConstant::Phi => {
            let s = k(-2)
                .add(&sig_inner.l12.scale(&2.into()))
                .sub(&sig_inner.l13)
                .add(&sig_inner.l23.scale(&2.into()));
            Quaternion::new(sig, s, k(5), k(-1), k(-4))
        }
        NamedConstant::Xi => {
            let a = named_constant(NamedConstant::A, sig);
            let b = named_constant(NamedConstant::B, sig);
            &(&a.square() + &(&a * &b)) + &b.square()
        }
        NamedConstant::XiStar => {
            let c = named_constant(NamedConstant::C, sig);
            let d = named_constant(NamedConstant::D, sig);
            &(&c.square() + &(&c * &d)) + &d.square()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> LambdaSig<Poly3> {
        LambdaSig::symbolic()
    }

    fn lam(i: usize) -> Poly3 {
        Poly3::var(i - 1)
    }

    #[test]
    fn identity_and_make() {
        let sig = sym();
        let one = Quaternion::from_ints(&sig, [1, 0, 0, 0]);
        let q = Quaternion::from_ints(&sig, [3, 1, 3, 10]);
        assert_eq!(&one * &q, q);
        assert_eq!(&q * &one, q);
        assert_eq!(&q + &Quaternion::zero(&sig), q);
    }

    #[test]
    fn from_scalars_checks_mode() {
        let sig = LambdaSig::from_ints(1, 1, 1);
        let r = |n: i64| Scalar::from(Rational::from(n));
        assert!(Quaternion::from_scalars(&sig, r(1), r(0), r(0), r(0)).is_ok());
        let bad = Quaternion::from_scalars(&sig, r(1), Scalar::from(Poly3::var(0)), r(0), r(0));
        assert_eq!(bad.unwrap_err(), Error::RingModeMismatch);
    }

    #[test]
    fn basis_products() {
        let sig = sym();
        let e = |i| Quaternion::basis(&sig, i);
        assert_eq!(&e(1) * &e(2), e(3).scale(&lam(1)));
        let l12 = &lam(1) * &lam(2);
        assert_eq!(&e(1) * &e(1), Quaternion::scalar(&sig, -&l12));
        let l123 = &l12 * &lam(3);
        assert_eq!(&(&e(1) * &e(2)) * &e(3), Quaternion::scalar(&sig, -&l123));
    }

    #[test]
    fn table_rows() {
        let h = special_sig(&SpecialSig::Hamilton);
        let minus_one = Quaternion::from_ints(&h, [-1, 0, 0, 0]);
        for i in 1..=3 {
            assert_eq!(Quaternion::basis(&h, i).square(), minus_one);
        }
        let split = special_sig(&SpecialSig::Split);
        assert_eq!(Quaternion::basis(&split, 3).square(), Quaternion::one(&split));
        let semi = special_sig(&SpecialSig::Semi);
        assert!(Quaternion::basis(&semi, 2).square().is_zero());
        assert!(Quaternion::basis(&semi, 3).square().is_zero());
        let gen = special_sig(&SpecialSig::Generalized(2.into(), 5.into()));
        assert_eq!(gen.lambda(), &[1.into(), 2.into(), 5.into()]);
        assert_eq!(SpecialSig::SplitSemi.lambda(), [1.into(), (-1).into(), 0.into()]);
    }

    #[test]
    fn algebra_mismatch() {
        let a = Quaternion::one(&LambdaSig::from_ints(1, 1, 1));
        let b = Quaternion::one(&LambdaSig::from_ints(1, 1, -1));
        assert_eq!(a.checked_mul(&b).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(a.checked_sub(&b).unwrap_err().to_string(), "algebra mismatch");
        // Equal λ values built separately are the same algebra.
        let c = Quaternion::one(&LambdaSig::from_ints(1, 1, 1));
        assert!(a.checked_add(&c).is_ok());
    }

    #[test]
    #[should_panic(expected = "algebra mismatch")]
    fn operator_panics_on_mismatch() {
        let a = Quaternion::one(&LambdaSig::from_ints(1, 1, 1));
        let b = Quaternion::one(&LambdaSig::from_ints(1, 1, 0));
        let _ = &a * &b;
    }

    #[test]
    fn scale_round_trip() {
        let sig = sym();
        let q = Quaternion::from_ints(&sig, [1, -2, 3, 5]);
        let seven = q.scale_int(7);
        assert_eq!(seven.scale_rat(&Rational::new(1, 7).unwrap()), q);
    }

    #[test]
    fn a_plus_3b() {
        let sig = sym();
        let a = named_constant(NamedConstant::A, &sig);
        let b = named_constant(NamedConstant::B, &sig);
        let sum = &a + &b.scale_int(3);
        assert_eq!(sum, Quaternion::from_ints(&sig, [7, -7, 0, 7]));
    }

    #[test]
    fn constants() {
        let sig = sym();
        assert_eq!(
            named_constant(NamedConstant::Theta, &sig),
            Quaternion::from_ints(&sig, [1, 2, 4, 8])
        );
        let omega = named_constant(NamedConstant::Omega, &sig);
        assert_eq!(omega.coeffs(), &[Poly3::zero(), lam(3), lam(2), lam(1)]);
        let psi = named_constant(NamedConstant::Psi, &sig);
        let expected: Poly3 = "2 + 6*l1*l2 + 3*l1*l3 - 2*l2*l3".parse().unwrap();
        assert_eq!(psi.coeffs()[0], expected);
        assert_eq!(
            &psi.coeffs()[1..],
            &[1, -5, 4].map(|n| Poly3::constant(n.into()))[..]
        );
        assert_eq!("Ξ*".parse::<NamedConstant>().unwrap(), NamedConstant::XiStar);
        assert!(matches!("Z".parse::<NamedConstant>(), Err(Error::UnknownConstant(_))));
    }

    #[test]
    fn product_constants() {
        let sig = sym();
        let n = |c| named_constant(c, &sig);
        let (a, b, c, d) = (n(NamedConstant::A), n(NamedConstant::B), n(NamedConstant::C), n(NamedConstant::D));
        let (psi, phi, omega) = (n(NamedConstant::Psi), n(NamedConstant::Phi), n(NamedConstant::Omega));
        assert_eq!(&b * &a, &psi + &omega.scale_int(7));
        assert_eq!(&a * &b, &psi - &omega.scale_int(7));
        assert_eq!(&d * &c, &phi + &omega.scale_int(3));
        assert_eq!(&c * &d, &phi - &omega.scale_int(3));
    }

    #[test]
    fn record_round_trip() {
        let sig = sym();
        let q = named_constant(NamedConstant::Psi, &sig);
        let json = serde_json::to_string(&q.to_record()).unwrap();
        let back: QuaternionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Quaternion::<Poly3>::from_record(&back).unwrap(), q);
        let h = special_sig(&SpecialSig::Hamilton);
        let r = Quaternion::from_ints(&h, [0, 1, 1, 2]).to_record();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"lambda":["1","1","1"],"s":"0","e1":"1","e2":"1","e3":"2"}"#
        );
        assert_eq!(Quaternion::<Poly3>::from_record(&r).unwrap_err(), Error::RingModeMismatch);
    }
}
