//! Command-line front end for `hirzewahl-core`.

pub mod args;
mod commands;
pub mod render;
pub mod scan;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{Context, Result};

pub use args::Cli;

/// Runs a parsed invocation and returns the process exit status: 0 on
/// success, 1 when `--strict` is set and a checked verdict failed.
pub fn run(cli: &Cli) -> Result<u8> {
    let report = commands::execute(&cli.command, &cli.global)?;
    match &cli.global.output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            report.write(cli.global.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            report.write(cli.global.format, &mut w)?;
            w.flush()?;
        }
    }
    Ok(u8::from(cli.global.strict && !report.ok))
}
