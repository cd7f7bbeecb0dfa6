mod algebra;
mod charges;
mod gut;
mod input;
mod mass;
mod report;
mod solve;

use clap::{Parser, Subcommand};
use report::{Format, Report};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact Dirac group algebra, nilpotent products, bound states, charge
/// tables, coupling unification and mass rules.
#[derive(Debug, Parser)]
#[command(name = "nilpotent", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Directory holding multiplets.csv, constants.json and charge_tables.csv.
    #[arg(long, env = "NILPOTENT_DATA_DIR", global = true)]
    pub data_dir: Option<PathBuf>,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group algebra and nilpotent products.
    Algebra {
        #[command(subcommand)]
        action: algebra::Action,
    },
    /// Bound-state coefficient matching and level formulas.
    Solve(solve::Args),
    /// Running couplings and the unification scale.
    Gut(gut::Args),
    /// Multiplet, boson and fermion mass rules.
    Mass(mass::Args),
    /// Charge structures, tables, zero counts and the generator grid.
    Charges {
        #[command(subcommand)]
        action: charges::Action,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }
}

impl From<nilpotent_core::Error> for CliError {
    fn from(e: nilpotent_core::Error) -> Self {
        let code = if matches!(e, nilpotent_core::Error::Data(_)) { 3 } else { 1 };
        CliError { code, message: e.to_string() }
    }
}

pub type CmdResult = Result<Report, CliError>;

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Algebra { action } => algebra::run(action, cli.seed),
        Command::Solve(a) => solve::run(a),
        Command::Gut(a) => gut::run(a, cli),
        Command::Mass(a) => mass::run(a, cli),
        Command::Charges { action } => charges::run(action, cli),
    }
}

fn status(r: &CmdResult) -> u8 {
    match r {
        Ok(r) if r.failed => 2,
        Ok(_) => 0,
        Err(e) => e.code,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&cli);
    match &result {
        Ok(r) => {
            let _ = std::io::stdout().lock().write_all(r.render(cli.format).as_bytes());
        }
        Err(e) => eprintln!("error: {}", e.message),
    }
    ExitCode::from(status(&result))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_statuses() {
        let mut r = Report::new(&serde_json::json!({}), String::new());
        assert_eq!(status(&Ok(r.clone())), 0);
        r.failed = true;
        assert_eq!(status(&Ok(r)), 2);
        assert_eq!(status(&Err(CliError::usage("x"))), 1);
        let data: CliError = nilpotent_core::Error::Data("gone".into()).into();
        assert_eq!(status(&Err(data)), 3);
    }
}
