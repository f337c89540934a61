//! The condition report for a passing and a failing quotient spec.

use svmod::catalog;

fn main() {
    for (name, spec) in [("t=2", catalog::q_t2_spec()), ("violation", catalog::condition_i_violation())] {
        let report = spec.verify_conditions().unwrap();
        println!("{name}: all pass = {}", report.all_pass());
        for e in &report.entries {
            println!("  {:>3} {} {:?}", e.condition, if e.pass { "pass" } else { "FAIL" }, e.witness);
        }
    }
}
