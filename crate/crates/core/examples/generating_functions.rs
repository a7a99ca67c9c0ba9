//! Power-series expansion of the quaternion generating functions.
//!
//! Run with `cargo run --example generating_functions`.

use jacobsthal_quat::quaternions::LambdaSig;
use jacobsthal_quat::scalars::Poly3;
use jacobsthal_quat::tjq::{genfun_coeffs, genfun_numerator, QuatSeqKind, QuatSequences};

fn main() {
    let sig = LambdaSig::<Poly3>::symbolic();
    let seqs = QuatSequences::new(&sig);
    for kind in [QuatSeqKind::JG, QuatSeqKind::KG] {
        let [n0, n1, n2] = genfun_numerator(kind, &sig);
        println!("{kind:?}(x) = [({n0}) + ({n1})x + ({n2})x²] / (1 - x - x² - 2x³)");
        let coeffs = genfun_coeffs(kind, &sig, 64);
        for (i, c) in coeffs.iter().enumerate() {
            assert_eq!(c, &seqs.term(kind, i as i64));
        }
        println!("  first 64 coefficients match; x^63 -> {}", coeffs[63]);
    }
}
