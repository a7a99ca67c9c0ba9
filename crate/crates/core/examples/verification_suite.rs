//! Whole-catalog sweeps: symbolic λ (a polynomial-identity proof) and the
//! table rows plus seeded random rational points.
//!
//! Run with `cargo run --release --example verification_suite`.

use std::time::Instant;

use jacobsthal_quat::tjq::{run_suite, LambdaMode, SuiteConfig};

fn main() {
    let start = Instant::now();
    let symbolic = run_suite(&SuiteConfig {
        n_range: -6..=20,
        a_range: -3..=3,
        b_range: -3..=3,
        ..Default::default()
    })
    .unwrap();
    println!("symbolic: {} checks, all passed = {}, {:?}", symbolic.results.len(), symbolic.all_passed(), start.elapsed());

    let start = Instant::now();
    let sampled = run_suite(&SuiteConfig {
        n_range: -6..=20,
        a_range: -3..=3,
        b_range: -3..=3,
        mode: LambdaMode::Sampled { random: 8 },
        seed: 42,
        ..Default::default()
    })
    .unwrap();
    println!("sampled:  {} checks, all passed = {}, {:?}", sampled.results.len(), sampled.all_passed(), start.elapsed());

    for (id, t) in &symbolic.totals {
        let informative = if t.informative_failed > 0 { format!("  ({} outside stated range)", t.informative_failed) } else { String::new() };
        println!("  {id:<16} {:>5} passed{informative}", t.passed);
    }
}
