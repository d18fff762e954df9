//! Command-line front end for the `lambert-step` library: barrier tables,
//! reflection sweeps, wavefunctions and the acceptance checks.

pub mod args;
pub mod checks;
pub mod commands;
pub mod error;
pub mod report;
pub mod table;

use anyhow::Context;
use args::{Cli, Command, Level, VerifyArgs};
use commands::Output;
use error::{CliError, CliResult, EXIT_OK, EXIT_VERIFY_FAILED};
use lambert_step::PhysicsConfig;
use report::RunReport;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::time::Instant;

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, argv: &[String]) -> CliResult<u8> {
    let physics = PhysicsConfig::new(cli.mass, cli.hbar)?;
    if cli.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::Potential(a) => write_outputs(&commands::potential(a, &physics, cli.jobs)?)?,
        Command::Reflect(a) => write_outputs(&[commands::reflect(a, &physics, cli.jobs)?])?,
        Command::Wavefunction(a) => write_outputs(&[commands::wavefunction(a, &physics, cli.jobs)?])?,
        Command::Verify(a) => return verify(a, cli, argv),
    }
    Ok(EXIT_OK)
}

fn write_outputs(outputs: &[Output]) -> CliResult<()> {
    for o in outputs {
        let csv = o.table.to_csv();
        match &o.path {
            Some(path) => std::fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?,
            None => std::io::stdout().write_all(csv.as_bytes()).context("writing to stdout")?,
        }
    }
    Ok(())
}

/// Runs the checks on the default units. The `--mass`/`--hbar` flags are
/// echoed but do not alter the reference values, which are stated for
/// `2m/ħ² = 1`.
fn verify(args: &VerifyArgs, cli: &Cli, argv: &[String]) -> CliResult<u8> {
    let start = Instant::now();
    let checks = checks::run_all(args.level);
    for chk in &checks {
        eprintln!("{}", chk.line());
    }
    let mut params = Map::new();
    params.insert(
        "level".into(),
        json!(match args.level {
            Level::Quick => "quick",
            Level::Full => "full",
        }),
    );
    params.insert("mass".into(), json!(cli.mass));
    params.insert("hbar".into(), json!(cli.hbar));
    params.insert("jobs".into(), Value::from(cli.jobs));
    let report = RunReport::new(argv.join(" "), params, checks, start.elapsed().as_millis());
    let text = report.to_json() + "\n";
    match &args.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes()).context("writing to stdout")?,
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
