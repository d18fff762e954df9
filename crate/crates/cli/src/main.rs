use clap::Parser;
use lambert_step_cli::args::Cli;
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    // clap exits with code 2 on usage errors
    let cli = Cli::parse();
    match lambert_step_cli::run(&cli, &argv) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
