//! Runs the built-in invariant checks and prints one line per check.
//!
//! `cargo run --example invariant_suite -- [scope ...]`

use lenzkit::verify::{run_invariant_suite, Scope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scopes: Vec<Scope> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let scopes = if scopes.is_empty() {
        Scope::ALL.to_vec()
    } else {
        scopes
    };
    let report = run_invariant_suite(&scopes);
    for c in &report.checks {
        let mark = if c.passed() { "ok " } else { "BAD" };
        println!("{mark} {:?}/{} ({} cases)", c.scope, c.name, c.cases);
        for x in &c.counterexamples {
            println!("      {x}");
        }
    }
    println!(
        "{}",
        if report.passed {
            "all checks passed"
        } else {
            "failures found"
        }
    );
    Ok(())
}
