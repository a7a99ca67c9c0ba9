//! Driving the `tjq` command line from code, capturing its output.
//!
//! Run with `cargo run --example cli_embedding`.

use jacobsthal_quat::cli;

fn main() {
    for args in [
        vec!["tjq", "seq", "k3", "0..6", "binet", "--format", "csv"],
        vec!["tjq", "quat", "kg", "--lambda", "1,1,-1", "0..1"],
        vec!["tjq", "genfun", "kg", "--terms", "3", "--format", "csv"],
        vec!["tjq", "verify", "--identity", "partial_sum_k", "--n-range", "0..0", "--k0-paper", "--format", "csv"],
    ] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(&args, &mut out, &mut err);
        println!("$ {}  -> exit {code}", args[1..].join(" "));
        print!("{}", String::from_utf8_lossy(&out));
    }
}
