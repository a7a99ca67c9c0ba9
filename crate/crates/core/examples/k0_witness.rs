//! Why `K_0 = 3`: with `K_0 = 0` the partial-sum, shift and generating
//! function identities break, and the suite says so.
//!
//! Run with `cargo run --example k0_witness`.

use jacobsthal_quat::sequences::{k3_binet, Family};
use jacobsthal_quat::tjq::{run_suite, IdentityId, SuiteConfig};

fn main() {
    println!("Binet K_0 = {}", k3_binet(0));
    let ids = vec![IdentityId::PartialSumK, IdentityId::Shift3K, IdentityId::GenfunK];
    for (label, family) in [("K_0 = 3", Family::k3()), ("K_0 = 0", Family::k3_paper())] {
        let cfg = SuiteConfig {
            ids: ids.clone(),
            n_range: 0..=5,
            k_family: family,
            ..Default::default()
        };
        let report = run_suite(&cfg).unwrap();
        println!("{label}:");
        for (id, t) in &report.totals {
            println!("  {id:<14} passed {:>2}  failed {:>2}", t.passed, t.failed);
        }
        if let Some(first) = report.failures().next() {
            println!("  first failure: {} at {}", first.id.name(), first.params);
        };
    }
}
