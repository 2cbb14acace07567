//! Runs the full claim registry and prints one line per claim.

use braidforge::verify::{self, VerifyOptions};

fn main() {
    let report = verify::run_verification(&VerifyOptions::default());
    for e in &report.entries {
        println!("{:<18} {}", e.status.to_string(), e.id);
    }
    println!(
        "{} pass, {} erratum-confirmed, {} fail",
        report.summary.pass, report.summary.erratum_confirmed, report.summary.fail
    );
}
