//! Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

mod common;

use std::io::Write;
use std::time::Instant;

type Criterion = (&'static str, fn() -> common::Check);

fn main() {
    let criteria: [Criterion; 9] = [
        ("constants regression", common::constants_regression),
        ("line gap at q = 1", common::line_gap_at_one),
        ("claim suite", common::claim_suite),
        ("sharpness probes", common::sharpness_probes),
        ("expansion cross-check", common::expansion_cross_check),
        ("kernel properties", common::kernel_suites),
        ("bound family monotonicity", common::bounds_monotonicity),
        ("mean identities", common::means_identities),
        ("series oracle", common::series_oracle),
    ];
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        writeln!(out, "criterion {}: {tag} {name} ({secs:.2}s): {detail}", i + 1).unwrap();
    }
    writeln!(out, "{} of {} criteria passed", criteria.len() - failed, criteria.len()).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
