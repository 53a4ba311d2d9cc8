mod args;
mod commands;
mod error;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliError;
use report::Report;

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let run = &cli.run;
    match &cli.command {
        Command::Invariant(a) => commands::invariant(a, run),
        Command::Construct { family } => commands::construct(family),
        Command::Verify(a) => commands::verify(a),
        Command::Criteria(a) => commands::criteria(a),
        Command::Theorems(a) => commands::theorems(a, run),
        Command::Conjectures(a) => commands::conjectures(a, run),
        Command::Sweep(a) => commands::sweep(a, run),
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    if cli.run.workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.run.workers)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = dispatch(cli)?;
    let body = report.render(cli.run.format)?;
    match &cli.run.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(report.status.code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return ExitCode::from(if help { 0 } else { 1 });
        }
    };
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
        Err(_) => ExitCode::from(3),
    }
}
