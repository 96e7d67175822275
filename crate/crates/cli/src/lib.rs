//! Command-line front end for `bernstein-core`.
//!
//! Every subcommand returns the text it prints on success; files requested
//! with `--out` are written before returning.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;

pub use args::{Cli, Command};
pub use error::CliError;

pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Alpha(a) => commands::alpha(a),
        Command::Compare(a) => commands::compare(a),
        Command::Constants(a) => commands::constants(a),
        Command::Kernel(a) => commands::kernel(a),
        Command::Verify(a) => commands::verify(a),
        Command::Extremal(a) => commands::extremal(a),
        Command::Ellipse(a) => commands::ellipse(a),
    }
}
