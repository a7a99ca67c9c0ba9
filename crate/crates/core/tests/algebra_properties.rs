mod common;

use common::{coeffs, lambda_point, quat, rational};
use jacobsthal_quat::quaternions::{LambdaSig, Quaternion};
use jacobsthal_quat::scalars::{Poly3, Rational, Ring};
use proptest::prelude::*;

/// `e_i e_j` for `i, j ∈ {1, 2, 3}` as (scalar factor, basis index), read off
/// the defining relations independently of the product formula.
fn table<S: Ring>(l: &[S; 3], i: usize, j: usize) -> (S, usize) {
    let [l1, l2, l3] = l;
    match (i, j) {
        (1, 1) => (l1.mul(l2).neg(), 0),
        (2, 2) => (l1.mul(l3).neg(), 0),
        (3, 3) => (l2.mul(l3).neg(), 0),
        (1, 2) => (l1.clone(), 3),
        (2, 1) => (l1.neg(), 3),
        (2, 3) => (l3.clone(), 1),
        (3, 2) => (l3.neg(), 1),
        (3, 1) => (l2.clone(), 2),
        (1, 3) => (l2.neg(), 2),
        _ => unreachable!(),
    }
}

fn oracle_mul<S: Ring>(p: &Quaternion<S>, q: &Quaternion<S>) -> Quaternion<S> {
    let l = p.sig().lambda();
    let mut out = [S::zero(), S::zero(), S::zero(), S::zero()];
    for (i, a) in p.coeffs().iter().enumerate() {
        for (j, b) in q.coeffs().iter().enumerate() {
            let (k, idx) = match (i, j) {
                (0, _) => (S::one(), j),
                (_, 0) => (S::one(), i),
                _ => table(l, i, j),
            };
            out[idx] = out[idx].add(&a.mul(b).mul(&k));
        }
    }
    let [s, c1, c2, c3] = out;
    Quaternion::new(p.sig(), s, c1, c2, c3)
}

#[test]
fn associativity_on_basis_triples() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let e = |i| Quaternion::basis(&sig, i);
    for i in 1..4 {
        for j in 1..4 {
            for k in 1..4 {
                assert_eq!(&(&e(i) * &e(j)) * &e(k), &e(i) * &(&e(j) * &e(k)), "e{i} e{j} e{k}");
            }
        }
    }
}

#[test]
fn anticommutation_and_triple_product() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let e = |i| Quaternion::basis(&sig, i);
    for i in 1..4 {
        for j in 1..4 {
            if i != j {
                assert_eq!(&e(i) * &e(j), -(&e(j) * &e(i)));
            }
        }
    }
    let l123 = &(&Poly3::var(0) * &Poly3::var(1)) * &Poly3::var(2);
    assert_eq!(&(&e(1) * &e(2)) * &e(3), Quaternion::scalar(&sig, -&l123));
}

#[test]
fn product_matches_basis_table_symbolically() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let p = Quaternion::from_ints(&sig, [3, -1, 4, 1]);
    let q = Quaternion::from_ints(&sig, [-5, 9, 2, -6]);
    let generic = Quaternion::new(&sig, Poly3::var(0), Poly3::var(1), Poly3::one(), Poly3::var(2));
    assert_eq!(&p * &q, oracle_mul(&p, &q));
    assert_eq!(&generic * &q, oracle_mul(&generic, &q));
    assert_eq!(&q * &generic, oracle_mul(&q, &generic));
}

#[test]
fn product_named_constants() {
    use jacobsthal_quat::quaternions::{named_constant as nc, NamedConstant as N};
    let sig = LambdaSig::<Poly3>::symbolic();
    let c = |n| nc(n, &sig);
    let (a, b, cc, d, om) = (c(N::A), c(N::B), c(N::C), c(N::D), c(N::Omega));
    assert_eq!(&b * &a, &c(N::Psi) + &om.scale_int(7));
    assert_eq!(&a * &b, &c(N::Psi) - &om.scale_int(7));
    assert_eq!(&d * &cc, &c(N::Phi) + &om.scale_int(3));
    assert_eq!(&cc * &d, &c(N::Phi) - &om.scale_int(3));
    assert_eq!(&(&b * &a) - &(&a * &b), om.scale_int(14));
    assert_eq!(&(&d * &cc) - &(&cc * &d), om.scale_int(6));
    assert_eq!(&c(N::Xi) + &om.scale_int(14), &(&a.square() + &(&b * &a)) + &b.square());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity_at_random_points(l in lambda_point(), p in coeffs(), q in coeffs(), r in coeffs()) {
        let sig = LambdaSig::point(l);
        let (p, q, r) = (quat(&sig, &p), quat(&sig, &q), quat(&sig, &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn distributivity_and_centrality(l in lambda_point(), p in coeffs(), q in coeffs(), r in coeffs(), k in rational()) {
        let sig = LambdaSig::point(l);
        let (p, q, r) = (quat(&sig, &p), quat(&sig, &q), quat(&sig, &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
        let pq = &p * &q;
        prop_assert_eq!(pq.scale(&k), &p.scale(&k) * &q);
        prop_assert_eq!(pq.scale(&k), &p * &q.scale(&k));
        let kq = Quaternion::scalar(&sig, k.clone());
        prop_assert_eq!(&kq * &p, &p * &kq);
    }

    #[test]
    fn product_matches_basis_table(l in lambda_point(), p in coeffs(), q in coeffs()) {
        let sig = LambdaSig::point(l);
        let (p, q) = (quat(&sig, &p), quat(&sig, &q));
        prop_assert_eq!(&p * &q, oracle_mul(&p, &q));
    }

    #[test]
    fn record_round_trip(l in lambda_point(), p in coeffs()) {
        let sig = LambdaSig::point(l);
        let p = quat(&sig, &p);
        let json = serde_json::to_string(&p.to_record()).unwrap();
        let back = Quaternion::<Rational>::from_record(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn mixed_algebras_are_rejected() {
    let p = Quaternion::from_ints(&LambdaSig::<Rational>::from_ints(1, 1, 1), [1, 2, 3, 4]);
    let q = Quaternion::from_ints(&LambdaSig::<Rational>::from_ints(1, 1, -1), [1, 2, 3, 4]);
    assert!(p.checked_mul(&q).is_err());
    assert!(p.checked_add(&q).is_err());
}
