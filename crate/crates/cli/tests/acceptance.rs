//! Acceptance suite: every criterion at its stated tolerance on the full
//! grids. Prints one PASS/FAIL line per criterion, followed by its
//! individual checks, and exits non-zero if any criterion fails.
//!
//! Criterion 10 is expected to fail: across the sampled energies the Lambert
//! curve lies above the tanh curve (R_step > R_lambert > R_tanh), so
//! "R_lambert below R_tanh" does not hold for that parameter set.

use lambert_step_cli::args::Level;
use lambert_step_cli::checks::{run, CRITERIA};
use std::process::ExitCode;
use std::time::Instant;

const TITLES: [&str; 10] = [
    "formula identity",
    "oracle cross-validation",
    "oracle calibration",
    "limits",
    "fixed point",
    "width ordering",
    "analytic-solution residual",
    "Heun machinery",
    "special functions",
    "figure-data regeneration",
];

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for n in CRITERIA {
        let start = Instant::now();
        let checks = run(n, Level::Full);
        let ok = !checks.is_empty() && checks.iter().all(|c| c.passed());
        let title = TITLES[n as usize - 1];
        println!(
            "{} criterion {n:>2}: {title} ({} checks, {:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            checks.len(),
            start.elapsed().as_secs_f64()
        );
        for chk in &checks {
            println!("    {}", chk.line());
        }
        if !ok {
            failed.push(n);
        }
    }
    println!(
        "\nacceptance: {} of {} criteria passed",
        CRITERIA.count() - failed.len(),
        CRITERIA.count()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
