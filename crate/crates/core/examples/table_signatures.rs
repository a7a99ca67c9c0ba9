//! The classical algebras obtained from special λ: Hamilton, split,
//! semi- and split-semi-quaternions.
//!
//! Run with `cargo run --example table_signatures`.

use jacobsthal_quat::quaternions::{special_sig, Quaternion, SpecialSig};
use jacobsthal_quat::tjq::{jg, kg};

fn main() {
    for row in SpecialSig::FIXED {
        let sig = special_sig(&row);
        let e = |i| Quaternion::basis(&sig, i);
        let sq: Vec<String> = (1..4).map(|i| e(i).square().coeffs()[0].to_string()).collect();
        let (x, y) = (jg(3, &sig), kg(2, &sig));
        println!("{:<11} λ = {sig}", row.name());
        println!("  e_i² = {}", sq.join(", "));
        println!("  JG_3 KG_2 = {}", &x * &y);
        println!("  KG_2 JG_3 = {}", &y * &x);
    }
}
