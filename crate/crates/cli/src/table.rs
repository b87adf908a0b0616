//! Loading δ/γ tables from the built-in names or from JSON files.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use ncolour_core::colour::builtin_delta_gamma;
use ncolour_core::{Colour, DeltaGammaTable, Variant};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk form: `{"n": 3, "delta": {"1,0": 1}, "gamma": {"0,2|1,0": 1}}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub n: usize,
    pub delta: BTreeMap<String, u8>,
    #[serde(default)]
    pub gamma: BTreeMap<String, u8>,
}

/// A table argument: a built-in name or a path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TableChoice {
    MeurmanPrimc,
    Alt,
    File(String),
}

impl TableChoice {
    pub fn parse(s: &str) -> TableChoice {
        match s {
            "mp" => TableChoice::MeurmanPrimc,
            "alt" => TableChoice::Alt,
            _ => TableChoice::File(s.to_string()),
        }
    }

    pub fn resolve(&self, n: usize) -> Result<DeltaGammaTable, CliError> {
        let t = match self {
            TableChoice::MeurmanPrimc => builtin_delta_gamma(Variant::MeurmanPrimc, n)?,
            TableChoice::Alt => builtin_delta_gamma(Variant::Alt, n)?,
            TableChoice::File(p) => load_table(p)?,
        };
        if t.n() != n {
            return Err(CliError::Usage(format!("table is for n = {}, but n = {n} was requested", t.n())));
        }
        Ok(t)
    }
}

impl fmt::Display for TableChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableChoice::MeurmanPrimc => f.write_str("mp"),
            TableChoice::Alt => f.write_str("alt"),
            TableChoice::File(p) => f.write_str(p),
        }
    }
}

fn parse_colour_key(key: &str, n: usize) -> Result<Colour, CliError> {
    let bad = || CliError::Table(format!("bad colour key {key:?}, expected \"k,l\""));
    let (k, l) = key.split_once(',').ok_or_else(bad)?;
    let k: u8 = k.trim().parse().map_err(|_| bad())?;
    let l: u8 = l.trim().parse().map_err(|_| bad())?;
    let c = Colour::new(k, l);
    c.check(n).map_err(|e| CliError::Table(format!("{key:?}: {e}")))?;
    Ok(c)
}

/// Builds and validates a table from its file form.
pub fn table_from_file(file: &TableFile) -> Result<DeltaGammaTable, CliError> {
    let mut t = DeltaGammaTable::empty(file.n)?;
    for (key, &v) in &file.delta {
        let c = parse_colour_key(key, file.n)?;
        t.set_delta(c, v).map_err(|e| CliError::Table(e.to_string()))?;
    }
    for (key, &v) in &file.gamma {
        let (a, b) =
            key.split_once('|').ok_or_else(|| CliError::Table(format!("bad pair key {key:?}, expected \"k1,l1|k2,l2\"")))?;
        let (c1, c2) = (parse_colour_key(a, file.n)?, parse_colour_key(b, file.n)?);
        t.set_gamma(c1, c2, v).map_err(|e| CliError::Table(e.to_string()))?;
    }
    let violations = t.validate();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Table(format!("table rejected: {}", list.join("; "))));
    }
    Ok(t)
}

/// The file form of a table.
pub fn table_to_file(t: &DeltaGammaTable) -> TableFile {
    let key = |c: Colour| format!("{},{}", c.a().unwrap(), c.b().unwrap());
    TableFile {
        n: t.n(),
        delta: t.delta_entries().map(|(c, v)| (key(c), v)).collect(),
        gamma: t.gamma_entries().map(|(c1, c2, v)| (format!("{}|{}", key(c1), key(c2)), v)).collect(),
    }
}

/// Reads a table from a JSON file.
pub fn load_table(path: impl AsRef<Path>) -> Result<DeltaGammaTable, CliError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Table(format!("{}: {e}", path.display())))?;
    let file: TableFile =
        serde_json::from_str(&text).map_err(|e| CliError::Table(format!("{}: {e}", path.display())))?;
    table_from_file(&file)
}
