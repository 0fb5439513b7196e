//! The seeded property suites behind `qconvex verify`.

use qconvex::verify::run_all;

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    for r in run_all(seed, 50) {
        println!(
            "{:<24} {} ({} cases)",
            r.name,
            if r.passed() { "pass" } else { "FAIL" },
            r.cases
        );
    }
}
