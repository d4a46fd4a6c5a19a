//! Command-line front end: state generation, norms, certificates, scans.

pub mod args;
pub mod commands;
pub mod error;
pub mod family;
pub mod statefile;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command};
use commands::EXIT_ERROR;

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version go to stdout with success
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => commands::gen(&cli, a, out),
        Command::Norm(a) => commands::norm(&cli, a, out),
        Command::Certify(a) => commands::certify(&cli, a, out),
        Command::Scan(a) => commands::scan(&cli, a, out),
        Command::Table1 => commands::table1(&cli, out),
        Command::Ppt(a) => commands::ppt(&cli, a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
