//! Runs every property suite with a small trial count.

use svmod::props;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let report = props::run_all(seed, Some(20));
    for s in &report.suites {
        println!("{:<13} {}", s.suite, if s.pass { "pass" } else { "FAIL" });
    }
    println!("all pass: {}", report.pass);
}
