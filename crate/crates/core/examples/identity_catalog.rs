//! Checking single identities, including the Cassini worked example at n = 1.
//!
//! Run with `cargo run --example identity_catalog`.

use jacobsthal_quat::quaternions::LambdaSig;
use jacobsthal_quat::scalars::{Poly3, Rational};
use jacobsthal_quat::sequences::Family;
use jacobsthal_quat::tjq::identities::LambdaTag;
use jacobsthal_quat::tjq::{check_identity, helper_y, helper_y1, Checker, Constants, IdentityId, Params, QuatSeqKind};

fn main() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let checker = Checker::new(&sig);
    let k = Constants::new(&sig);

    // JG_2 JG_0 - JG_1² at n = 1, with the helper quaternions that build its
    // closed form.
    let y0 = helper_y(0, 1, QuatSeqKind::JG, &k);
    assert_eq!(y0, -(&k.a + &k.b.scale_int(3)));
    assert_eq!(helper_y1(1, QuatSeqKind::JG, &k), &k.a.scale_int(3) + &k.b.scale_int(2));
    let (lhs, rhs) = checker.sides(IdentityId::CassiniJ, &Params::n(1)).unwrap();
    println!("49 [JG_2 JG_0 - JG_1²] = {}", lhs.scale_int(49));
    assert_eq!(lhs, rhs);

    for part in 0..3 {
        let r = checker.check(IdentityId::CassiniExample, &Params::part(part), LambdaTag::Symbolic);
        println!("cassini_example part {part}: pass = {}", r.unwrap().pass);
    }

    // Vajda at one rational point; the JSON form is what `tjq verify` prints.
    let lambda = [Rational::from(2), Rational::new(-1, 3).unwrap(), Rational::from(5)];
    let r = check_identity(IdentityId::VajdaJ, &Params::nab(4, -2, 3), Some(lambda), &Family::k3()).unwrap();
    println!("{}", serde_json::to_string(&r).unwrap());

    let err = check_identity(IdentityId::VajdaJ, &Params::n(4), None, &Family::k3()).unwrap_err();
    println!("vajda_j with only n: {err}");
}
