//! Enumeration, bijection and identity-verification commands for
//! `n^2`-coloured partitions, built on `ncolour-core`.

use std::fmt;

pub mod claims;
pub mod commands;
pub mod oracles;
pub mod report;
pub mod table;

pub use claims::{verify, Claim, VerifyOptions};
pub use report::{Status, VerificationReport};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Table(String),
    /// The estimated enumeration size exceeds the budget.
    Budget { estimate: u128, budget: u128 },
    Core(ncolour_core::Error),
    Io(std::io::Error),
}

impl CliError {
    /// `1` when the input was well-formed but is not a member of the
    /// required family, `2` otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(ncolour_core::Error::NotMember(_)) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Table(m) => write!(f, "table: {m}"),
            CliError::Budget { estimate, budget } => write!(
                f,
                "refusing to run: about {estimate} enumeration nodes estimated, budget is {budget} (use --force)"
            ),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ncolour_core::Error> for CliError {
    fn from(e: ncolour_core::Error) -> CliError {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}
