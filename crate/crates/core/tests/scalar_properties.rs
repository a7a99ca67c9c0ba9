mod common;

use common::{lambda_point, poly, rational};
use jacobsthal_quat::error::Error;
use jacobsthal_quat::scalars::{Poly3, Rational, Ring, Scalar};
use proptest::prelude::*;

fn ring_axioms<S: Ring>(a: &S, b: &S, c: &S) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(&S::zero()), *a);
    assert_eq!(a.mul(&S::one()), *a);
    assert!(a.add(&a.neg()).is_zero());
    assert_eq!(a.sub(b), a.add(&b.neg()));
}

proptest! {
    #[test]
    fn rational_ring_axioms(a in rational(), b in rational(), c in rational()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn eval_is_a_homomorphism(p in poly(), q in poly(), point in lambda_point()) {
        prop_assert_eq!((&p * &q).eval(&point), p.eval(&point) * q.eval(&point));
        prop_assert_eq!((&p + &q).eval(&point), p.eval(&point) + q.eval(&point));
        prop_assert_eq!((&p - &q).eval(&point), p.eval(&point) - q.eval(&point));
    }

    #[test]
    fn rational_canonical_form(n in -1000i64..1000, d in prop::num::i64::ANY.prop_filter("nonzero", |d| *d != 0)) {
        let r = Rational::new(n, d % 1000 + if d % 1000 == 0 { 1 } else { 0 }).unwrap();
        prop_assert_eq!(r.normalized(), r.clone());
        prop_assert_eq!(r.normalized().normalized(), r.normalized());
        prop_assert!(r.denom() > &0.into());
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn poly_canonical_form(p in poly()) {
        let again = Poly3::from_terms(p.terms().iter().cloned());
        prop_assert_eq!(&again, &p);
        prop_assert!(p.terms().windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert!(p.terms().iter().all(|(_, c)| !c.is_zero()));
        prop_assert_eq!(p.to_string().parse::<Poly3>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly3>(&json).unwrap(), p);
    }
}

#[test]
fn examples() {
    let l1 = Poly3::var(0);
    let one = Poly3::one();
    assert_eq!(&(&l1 + &one) * &(&l1 - &one), &(&l1 * &l1) - &one);
    let [a, b, c] = [Poly3::var(0), Poly3::var(1), Poly3::var(2)];
    let abc = &(&a * &b) * &c;
    let t = |x: i64, y: i64, z: i64| [Rational::from(x), y.into(), z.into()];
    assert_eq!(abc.eval(&t(1, 1, 1)), Rational::one());
    assert_eq!((&a * &b).eval(&t(1, 1, -1)), Rational::one());
    let psi_s: Poly3 = "2 + 6*l1*l2 + 3*l1*l3 - 2*l2*l3".parse().unwrap();
    assert_eq!(psi_s.eval(&t(1, 1, 1)), Rational::from(9));
}

#[test]
fn modes_never_mix() {
    let r = Scalar::from(Rational::from(2));
    let p = Scalar::from(Poly3::var(1));
    assert_eq!(r.try_add(&p), Err(Error::RingModeMismatch));
    assert_eq!(p.try_mul(&r), Err(Error::RingModeMismatch));
    assert_eq!(Error::RingModeMismatch.to_string(), "ring mode mismatch");
}
