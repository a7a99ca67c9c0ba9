#![allow(dead_code)]

use jacobsthal_quat::quaternions::{LambdaSig, Quaternion};
use jacobsthal_quat::scalars::{Poly3, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=24).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn lambda_point() -> impl Strategy<Value = [Rational; 3]> {
    [small_rational(), small_rational(), small_rational()]
}

pub fn poly() -> impl Strategy<Value = Poly3> {
    prop::collection::vec(([0u16..3, 0u16..3, 0u16..3], rational()), 0..5).prop_map(Poly3::from_terms)
}

pub fn coeffs() -> impl Strategy<Value = [Rational; 4]> {
    [rational(), rational(), rational(), rational()]
}

pub fn quat(sig: &LambdaSig<Rational>, c: &[Rational; 4]) -> Quaternion<Rational> {
    Quaternion::from_rationals(sig, c.clone())
}
