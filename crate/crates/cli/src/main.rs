mod args;
mod commands;
mod error;
mod grid;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Det(a) => commands::det(a),
        Command::Table(a) => commands::table(a),
        Command::Asympt(a) => commands::asympt(a),
        Command::Verify(a) => {
            let outcome = commands::verify(a)?;
            if outcome.failed == 0 {
                return Ok(outcome.text);
            }
            print!("{}", outcome.text);
            Err(CliError::VerifyFailed {
                failed: outcome.failed,
                total: outcome.total,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(err) => {
            let _ = std::io::stdout().flush();
            eprintln!("conedet: error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
