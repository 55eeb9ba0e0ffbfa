mod args;
mod commands;
mod input;
mod report;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use input::{CliError, EXIT_USAGE};

fn run(cli: &Cli) -> Result<u8, CliError> {
    let (rendered, out) = match &cli.command {
        Command::Spectrum(a) => (commands::spectrum(a)?, &a.common.out),
        Command::Verify(a) => (commands::verify(a)?, &a.common.out),
        Command::Quotient(a) => (commands::quotient(a)?, &a.common.out),
        Command::Decompose(a) => (commands::decompose(a)?, &a.common.out),
        Command::Sweep(a) => (commands::sweep(a)?, &a.common.out),
    };
    match out {
        Some(path) => {
            fs::write(path, &rendered.text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(rendered.text.as_bytes());
        }
    }
    Ok(rendered.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
