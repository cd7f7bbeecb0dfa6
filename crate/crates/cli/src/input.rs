use crate::{Cli, CliError};
use nilpotent_core::masses::Dataset;
use nilpotent_core::nilpotent::{make_nilpotent, NilpotentVector};
use nilpotent_core::rational::{parse_q, to_f64, Q};

pub fn rational(s: &str) -> Result<Q, CliError> {
    parse_q(s).map_err(|e| CliError::usage(e.to_string()))
}

/// Accepts decimals, exponents and `a/b`.
pub fn float(s: &str) -> Result<f64, String> {
    match s.split_once('/') {
        Some(_) => parse_q(s).map(|x| to_f64(&x)).map_err(|e| e.to_string()),
        None => s.trim().parse::<f64>().map_err(|e| format!("`{s}`: {e}")),
    }
}

pub fn triple(s: &str) -> Result<[Q; 3], CliError> {
    let v = s.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
    <[Q; 3]>::try_from(v).map_err(|_| CliError::usage(format!("expected three components in `{s}`")))
}

pub fn list<T>(s: &str, f: impl Fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
    s.split([',', ';']).map(str::trim).filter(|x| !x.is_empty()).map(f).collect()
}

#[derive(Debug, clap::Args)]
pub struct StateArgs {
    /// Energy (rational).
    #[arg(long = "E", allow_hyphen_values = true)]
    pub e: String,
    /// Momentum components, comma separated.
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    pub p: String,
    /// Mass.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub m: String,
    #[arg(long = "sign-e", default_value_t = 1, allow_hyphen_values = true)]
    pub sign_e: i8,
    #[arg(long = "sign-p", default_value_t = 1, allow_hyphen_values = true)]
    pub sign_p: i8,
}

impl StateArgs {
    pub fn parts(&self) -> Result<(Q, [Q; 3], Q), CliError> {
        Ok((rational(&self.e)?, triple(&self.p)?, rational(&self.m)?))
    }

    pub fn state(&self) -> Result<NilpotentVector, CliError> {
        let (e, p, m) = self.parts()?;
        Ok(make_nilpotent(e, p, m, self.sign_e, self.sign_p))
    }
}

pub fn dataset(cli: &Cli) -> Result<Dataset, CliError> {
    Ok(match &cli.data_dir {
        Some(d) => Dataset::from_dir(d)?,
        None => Dataset::bundled(),
    })
}
