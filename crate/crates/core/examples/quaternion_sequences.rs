//! `JG_n` and `KG_n`: definitional values against both Binet forms.
//!
//! Run with `cargo run --example quaternion_sequences`.

use jacobsthal_quat::quaternions::LambdaSig;
use jacobsthal_quat::scalars::Poly3;
use jacobsthal_quat::tjq::{jg_binet, jg_binet_cases, kg_binet, kg_binet_cases, Constants, QuatSequences};

fn main() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let seqs = QuatSequences::new(&sig);
    let k = Constants::new(&sig);
    for n in -3..=6 {
        println!("JG_{n:<3} = {}", seqs.jg(n));
        println!("KG_{n:<3} = {}", seqs.kg(n));
    }
    for n in -20..=100 {
        assert_eq!(seqs.jg(n), jg_binet(n, &k));
        assert_eq!(seqs.jg(n), jg_binet_cases(n, &k));
        assert_eq!(seqs.kg(n), kg_binet(n, &k));
        assert_eq!(seqs.kg(n), kg_binet_cases(n, &k));
    }
    println!("Binet forms agree with the recurrence on [-20, 100]");

    // Coefficients never depend on λ; only products do.
    let a = seqs.jg(4) * seqs.jg(5);
    println!("JG_4 JG_5 = {a}");
}
