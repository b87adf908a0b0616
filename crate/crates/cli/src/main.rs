use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ncolour::claims::{verify, Claim, VerifyOptions, DEFAULT_BUDGET};
use ncolour::commands::{cmd_biject, cmd_enumerate, cmd_series, EnumerateArgs, Family, SeriesKind};
use ncolour::table::TableChoice;
use ncolour::{CliError, Format};

#[derive(Parser)]
#[command(name = "ncolour", version, about = "Enumerate n^2-coloured partitions and verify their identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every member of a family up to a weight.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        max_weight: u64,
        /// `mp`, `alt`, or a JSON table file (for `--family cn`).
        #[arg(long, default_value = "mp")]
        table: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Check an identity up to a truncation order.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long)]
        n: Option<usize>,
        /// Truncation order (weight bound for `bijection`).
        #[arg(long, env = "NCOLOUR_ORDER")]
        order: Option<i64>,
        #[arg(long, default_value = "mp")]
        table: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
        /// Largest estimated number of enumeration nodes to run without `--force`.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Perturb one compared coefficient; the report must then fail.
        #[arg(long, hide = true)]
        inject_corruption: bool,
    },
    /// Apply the bijection to a partition, or its inverse to `MU | NU`.
    Biject {
        input: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "mp")]
        table: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one of the generating functions.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, env = "NCOLOUR_ORDER", default_value_t = 10)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Enumerate { family, n, max_weight, table, format, force } => {
            let t = match family {
                Family::Cn => Some(TableChoice::parse(&table).resolve(n)?),
                _ => None,
            };
            let args = EnumerateArgs { family, n, max_weight, table: t.as_ref(), format, force };
            cmd_enumerate(&args, &mut out)?;
            Ok(0)
        }
        Cmd::Verify { claim, n, order, table, format, force, budget, inject_corruption } => {
            let opts = VerifyOptions { n, order, table: TableChoice::parse(&table), corrupt: inject_corruption, force, budget };
            let report = verify(claim, &opts)?;
            match format {
                Format::Text => write!(out, "{report}")?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serialisable"))?,
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Biject { input, n, table, inverse, format } => {
            let t = TableChoice::parse(&table).resolve(n)?;
            cmd_biject(&input, &t, inverse, format, &mut out)?;
            Ok(0)
        }
        Cmd::Series { kind, n, order, format } => {
            if n == 0 || order < 0 {
                return Err(CliError::Usage("n must be positive and the order non-negative".into()));
            }
            cmd_series(kind, n, order, format, &mut out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ncolour: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
