use std::fmt;
use std::sync::Arc;

use clap::ValueEnum;
use fgre::chartheory::csv_field;
use fgre::groupcore::{builtin_group, GroupDefinition, DEFAULT_CAP};
use fgre::{Error, FiniteGroup};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    Engine(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(Error::CapExceeded { .. }) => 3,
            CliError::Engine(Error::UnsupportedExponent { .. }) => 4,
            _ => 2,
        }
    }
}

/// Closure cap: explicit flag, then `FGRE_CAP`, then the default.
pub fn closure_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("FGRE_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| CliError::Usage(format!("FGRE_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Resolves `builtin:NAME` or `file:PATH`.
pub fn load_group(spec: &str) -> Result<Arc<FiniteGroup>, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(builtin_group(name)?);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
        let def = GroupDefinition::from_json(&text)?;
        return Ok(Arc::new(def.build(closure_cap(None)?)?));
    }
    Err(CliError::Usage(format!("group must be builtin:NAME or file:PATH, got {spec:?}")))
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

pub fn csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
