mod args;
mod commands;
mod error;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Hierarchy { n, depth_cap } => {
            commands::hierarchy(out, usize::from(*n), usize::from(*depth_cap))
        }
        Command::Check { seed, cases } => commands::check(out, *seed, *cases),
        Command::Euler { expr } => commands::euler(out, expr),
        Command::Integrate { expr } => commands::integrate(out, expr),
        Command::Bracket { v, w } => commands::bracket_cmd(out, v, w),
        Command::Simulate(args) => commands::simulate_cmd(out, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
