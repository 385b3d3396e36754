//! `mrbound` command-line front end.

mod args;
mod commands;
mod output;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use mrbound::{MoleculeRegistry, UnitSystem};

use args::{Cli, Command};
use commands::{CliError, Context};

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn context(cli: &Cli) -> Result<Context, CliError> {
    let units = match &cli.constants_file {
        Some(p) => UnitSystem::parse(&read(p)?)
            .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => UnitSystem::default(),
    };
    let builtin = MoleculeRegistry::builtin();
    let molecules = match &cli.molecules_file {
        Some(p) => builtin
            .merged_with(&read(p)?)
            .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => builtin,
    };
    Ok(Context { units, molecules })
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let ctx = context(cli)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Table(a) => commands::table(a, &ctx, &mut out),
        Command::Spectrum(a) => commands::spectrum(a, &ctx, &mut out),
        Command::Compare(a) => commands::compare(a, &ctx, &mut out),
        Command::Wavefunction(a) => commands::wavefunction(a, &ctx, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mrbound: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
