//! Arithmetic in the 3-parameter generalized quaternion algebra, both over
//! symbolic λ and at a rational point.
//!
//! Run with `cargo run --example quaternion_algebra`.

use jacobsthal_quat::quaternions::{named_constant, LambdaSig, NamedConstant, Quaternion};
use jacobsthal_quat::scalars::{Poly3, Rational};

fn main() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let e = |i| Quaternion::basis(&sig, i);
    let names = ["1", "e1", "e2", "e3"];
    for i in 1..4 {
        for j in 1..4 {
            println!("{} * {} = {}", names[i], names[j], &e(i) * &e(j));
        }
    }
    println!("e1 e2 e3 = {}", &(&e(1) * &e(2)) * &e(3));

    // The products of the named constants carry λ in their scalar parts.
    let c = |n| named_constant(n, &sig);
    let (a, b) = (c(NamedConstant::A), c(NamedConstant::B));
    let omega = c(NamedConstant::Omega);
    let psi = c(NamedConstant::Psi);
    assert_eq!(&b * &a, &psi + &omega.scale_int(7));
    assert_eq!(&a * &b, &psi - &omega.scale_int(7));
    println!("BA - AB = 14 Omega = {}", &(&b * &a) - &(&a * &b));

    // At λ = (1/2, -3, 2) the same element is a plain rational quaternion.
    let point = LambdaSig::point([Rational::new(1, 2).unwrap(), (-3).into(), 2.into()]);
    let p = Quaternion::from_ints(&point, [1, 2, 3, 4]);
    let q = Quaternion::from_ints(&point, [0, -1, 5, 2]);
    println!("at λ = {point}: pq = {}, qp = {}", &p * &q, &q * &p);

    // Mixing algebras is an error, not a silent coercion.
    let other = Quaternion::from_ints(&LambdaSig::from_ints(1, 1, 1), [1, 0, 0, 0]);
    println!("mixed product: {:?}", p.checked_mul(&other).unwrap_err().to_string());
}
