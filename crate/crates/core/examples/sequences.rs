//! The three scalar sequences: tables, negative indices, Binet forms and
//! closed-form partial sums.
//!
//! Run with `cargo run --example sequences`.

use jacobsthal_quat::sequences::{j3, j3_binet, k3, k3_binet, sum_j3, sum_k3, x_cyclic};

fn main() {
    println!("{:>4} {:>4} {:>8} {:>8}", "n", "X_n", "J_n", "K_n");
    for n in -6..=12 {
        println!("{n:>4} {:>4} {:>8} {:>8}", x_cyclic(n), j3(n), k3(n));
    }

    // Below zero the recurrence runs backwards and halves at each step.
    assert_eq!(j3(-2).to_string(), "1/2");

    for n in [-20, 0, 7, 50] {
        assert_eq!(j3(n), j3_binet(n));
        assert_eq!(k3(n), k3_binet(n));
    }
    println!("J_50 = {} (recurrence and Binet agree)", j3(50));

    println!("J_0 + ... + J_10 = {}", sum_j3(10).unwrap());
    println!("K_0 + ... + K_10 = {}", sum_k3(10).unwrap());
}
