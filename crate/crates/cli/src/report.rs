//! Verification reports and the JSON form of series.

use std::fmt;

use ncolour_core::qseries::{Mismatch, QSeries};
use serde::Serialize;

/// Bumped whenever a field of [`VerificationReport`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Parameters {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<String>,
}

/// The first disagreement found. Series comparisons fill every field;
/// other checks leave `q` and `monomial` empty.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MismatchReport {
    pub context: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<Vec<i16>>,
    pub expected: String,
    pub actual: String,
}

impl MismatchReport {
    pub fn from_series(context: &str, m: &Mismatch, nvars: usize) -> MismatchReport {
        MismatchReport {
            context: context.to_string(),
            q: Some(m.q),
            monomial: Some(m.monomial.exps(nvars).to_vec()),
            expected: m.expected.to_string(),
            actual: m.actual.to_string(),
        }
    }

    pub fn other(context: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> MismatchReport {
        MismatchReport { context: context.into(), q: None, monomial: None, expected: expected.into(), actual: actual.into() }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub claim: String,
    pub parameters: Parameters,
    pub status: Status,
    pub checked_terms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchReport>,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} n={}", self.claim, self.parameters.n)?;
        if let Some(o) = self.parameters.order {
            write!(f, " order={o}")?;
        }
        if let Some(w) = self.parameters.max_weight {
            write!(f, " max-weight={w}")?;
        }
        if let Some(t) = &self.parameters.table {
            write!(f, " table={t}")?;
        }
        writeln!(f, " terms={} time={:.1}ms", self.checked_terms, self.wall_time_ms)?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        if let Some(m) = &self.mismatch {
            write!(f, "  first mismatch in {}", m.context)?;
            if let Some(q) = m.q {
                write!(f, " at q^{q}")?;
            }
            if let Some(mono) = &m.monomial {
                write!(f, " monomial {mono:?}")?;
            }
            writeln!(f, ": expected {}, actual {}", m.expected, m.actual)?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MonomialJson {
    pub exps: Vec<i16>,
    pub coeff: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TermJson {
    pub q: i64,
    pub monomials: Vec<MonomialJson>,
}

/// `{order, terms: [{q, monomials: [{exps, coeff}]}]}`; coefficients are
/// decimal strings since they can exceed 64 bits.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SeriesJson {
    pub order: Option<i64>,
    pub terms: Vec<TermJson>,
}

impl SeriesJson {
    pub fn new(s: &QSeries) -> SeriesJson {
        let nvars = s.nvars();
        SeriesJson {
            order: (!s.is_exact()).then(|| s.order()),
            terms: s
                .iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(q, p)| TermJson {
                    q,
                    monomials: p
                        .terms()
                        .map(|(m, c)| MonomialJson { exps: m.exps(nvars).to_vec(), coeff: c.to_string() })
                        .collect(),
                })
                .collect(),
        }
    }
}
