//! The `enumerate`, `biject` and `series` commands, writing to any sink.

use std::io::Write;

use ncolour_core::bijection::{phi, phi_inverse, PartitionPair};
use ncolour_core::frobenius::{enumerate_frobenius, FrobeniusPartition};
use ncolour_core::partition::{enumerate, ColouredPartition, MembershipSpec};
use ncolour_core::qseries::{constant_term_product, main2_jacobi_form, main2_product_form, QSeries};
use ncolour_core::DeltaGammaTable;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::claims::{estimate_pn_nodes, DEFAULT_BUDGET};
use crate::report::SeriesJson;
use crate::{CliError, Format};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Family {
    Pn,
    Cn,
    P0,
    Fn,
}

#[derive(Serialize)]
struct PartJson {
    size: u32,
    a: u8,
    b: u8,
}

fn partition_json(p: &ColouredPartition) -> Vec<PartJson> {
    p.parts()
        .iter()
        .map(|q| PartJson { size: q.size, a: q.colour.a().unwrap(), b: q.colour.b().unwrap() })
        .collect()
}

fn frobenius_json(f: &FrobeniusPartition) -> serde_json::Value {
    let row = |r: &[ncolour_core::frobenius::Entry], key: &str| -> Vec<serde_json::Value> {
        r.iter().map(|e| json!({"value": e.value, key: e.index})).collect()
    };
    json!({"top": row(f.top(), "a"), "bottom": row(f.bottom(), "b")})
}

pub struct EnumerateArgs<'a> {
    pub family: Family,
    pub n: usize,
    pub max_weight: u64,
    /// Required for `Cn`.
    pub table: Option<&'a DeltaGammaTable>,
    pub format: Format,
    pub force: bool,
}

/// Lists every member up to the weight bound, sorted by weight.
pub fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<usize, CliError> {
    let n = args.n;
    let est = match args.family {
        Family::P0 => 0,
        _ => estimate_pn_nodes(n, args.max_weight),
    };
    if est > DEFAULT_BUDGET && !args.force {
        return Err(CliError::Budget { estimate: est, budget: DEFAULT_BUDGET });
    }
    let spec = match args.family {
        Family::Pn => Some(MembershipSpec::Pn(n)),
        Family::Cn => {
            let t = args.table.ok_or_else(|| CliError::Usage("--family cn needs a table".into()))?;
            Some(MembershipSpec::Cn(t.clone()))
        }
        Family::P0 => Some(MembershipSpec::P0),
        Family::Fn => None,
    };
    let count;
    match spec {
        Some(spec) => {
            let list = enumerate(&spec, args.max_weight)?;
            count = list.len();
            match args.format {
                Format::Text => {
                    for p in &list {
                        writeln!(out, "{p}")?;
                    }
                }
                Format::Json => {
                    let parts: Vec<_> = list.iter().map(partition_json).collect();
                    let doc = json!({"family": family_name(args.family), "n": spec.n(), "max_weight": args.max_weight,
                        "count": count, "partitions": parts});
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))?;
                }
            }
        }
        None => {
            let mut list = enumerate_frobenius(n, args.max_weight)?;
            list.sort_by_cached_key(|f| (f.weight(), f.to_string()));
            count = list.len();
            match args.format {
                Format::Text => {
                    for f in &list {
                        writeln!(out, "{f}")?;
                    }
                }
                Format::Json => {
                    let parts: Vec<_> = list.iter().map(frobenius_json).collect();
                    let doc = json!({"family": "fn", "n": n, "max_weight": args.max_weight, "count": count,
                        "partitions": parts});
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))?;
                }
            }
        }
    }
    Ok(count)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Pn => "pn",
        Family::Cn => "cn",
        Family::P0 => "p0",
        Family::Fn => "fn",
    }
}

/// Parses `μ | ν`.
pub fn parse_pair(s: &str) -> Result<PartitionPair, CliError> {
    let (mu, nu) = s.split_once('|').ok_or_else(|| CliError::Usage("expected \"MU | NU\"".into()))?;
    Ok(PartitionPair { mu: mu.trim().parse()?, nu: nu.trim().parse()? })
}

/// Applies `Φ` (or its inverse) and prints the image with a summary of
/// what is conserved.
pub fn cmd_biject(input: &str, table: &DeltaGammaTable, inverse: bool, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let (lambda, pair) = if inverse {
        let pair = parse_pair(input)?;
        (phi_inverse(&pair, table)?, pair)
    } else {
        let lambda: ColouredPartition = input.trim().parse()?;
        let pair = phi(&lambda, table)?;
        (lambda, pair)
    };
    let summary = format!(
        "weight {} = {} + {}, parts {} = {} + {}",
        lambda.weight(),
        pair.mu.weight(),
        pair.nu.weight(),
        lambda.len(),
        pair.mu.len(),
        pair.nu.len()
    );
    match format {
        Format::Text => {
            if inverse {
                writeln!(out, "lambda = {lambda}")?;
            } else {
                writeln!(out, "mu = {}", pair.mu)?;
                writeln!(out, "nu = {}", pair.nu)?;
            }
            writeln!(out, "{summary}")?;
        }
        Format::Json => {
            let doc = json!({
                "lambda": lambda.to_string(),
                "mu": pair.mu.to_string(),
                "nu": pair.nu.to_string(),
                "weight": lambda.weight(),
                "parts": lambda.len(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum SeriesKind {
    /// `[x^0] ∏ (−x a_i q; q)_∞ (−x^{-1} a_i^{-1}; q)_∞`.
    ConstantTerm,
    /// The Jacobi-sum form.
    Jacobi,
    /// The sum of infinite products.
    Product,
    /// Enumerated `P_n` with colour monomials.
    Pn,
}

pub fn series(kind: SeriesKind, n: usize, order: i64) -> Result<QSeries, CliError> {
    Ok(match kind {
        SeriesKind::ConstantTerm => constant_term_product(n, order),
        SeriesKind::Jacobi => main2_jacobi_form(n, order),
        SeriesKind::Product => main2_product_form(n, order)?,
        SeriesKind::Pn => {
            let est = estimate_pn_nodes(n, order as u64);
            if est > DEFAULT_BUDGET {
                return Err(CliError::Budget { estimate: est, budget: DEFAULT_BUDGET });
            }
            let mut s = QSeries::zero(n, order);
            for p in enumerate(&MembershipSpec::Pn(n), order as u64)? {
                s.add_to_coeff(p.weight() as i64, p.monomial(), BigInt::one());
            }
            s
        }
    })
}

pub fn cmd_series(kind: SeriesKind, n: usize, order: i64, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let s = series(kind, n, order)?;
    match format {
        Format::Text => {
            for (e, p) in s.iter().filter(|(_, p)| !p.is_zero()) {
                writeln!(out, "q^{e}: {p}")?;
            }
            writeln!(out, "+ O(q^{})", order + 1)?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&SeriesJson::new(&s)).expect("serialisable"))?,
    }
    Ok(())
}
