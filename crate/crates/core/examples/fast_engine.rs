//! Companion-matrix evaluation of `J_n` for large `n`, checked against the
//! recurrence and the Binet form.
//!
//! Run with `cargo run --release --example fast_engine`.

use std::time::Instant;

use jacobsthal_quat::sequences::{evaluate, CompanionMatrix, Engine, SeqKind};

fn main() {
    let m = CompanionMatrix::base();
    println!("det M = {}", m.determinant());
    let split = CompanionMatrix::power(300).mul(&CompanionMatrix::power(700));
    assert_eq!(split, CompanionMatrix::power(1000));

    let n = 10_000;
    let fast = evaluate(SeqKind::J3, n, Engine::Matrix).unwrap();
    assert_eq!(fast, evaluate(SeqKind::J3, n, Engine::Recurrence).unwrap());
    assert_eq!(fast, evaluate(SeqKind::J3, n, Engine::Binet).unwrap());
    println!("J_{n} has {} bits; all three engines agree", fast.numer().bits());

    for n in [10_000, 100_000, 1_000_000] {
        let start = Instant::now();
        let v = evaluate(SeqKind::J3, n, Engine::Matrix).unwrap();
        println!("matrix  J_{n:<8} {:>8} bits  {:?}", v.numer().bits(), start.elapsed());
    }
}
