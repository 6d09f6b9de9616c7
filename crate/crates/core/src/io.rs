//! JSON file formats for patterns, knots and spectra.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::seifert::{Pattern, SeifertForm};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PatternFile {
    name: String,
    winding_number: i64,
    seifert_matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    axis_linking: Option<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KnotFile {
    name: String,
    seifert_matrix: Vec<Vec<i64>>,
}

fn parse_err(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

fn matrix_from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
    if rows.is_empty() {
        return Ok(IntMatrix::zeros(0, 0));
    }
    IntMatrix::from_rows(rows)
}

fn rows_of(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(big_to_i64).collect())
        .collect()
}

fn big_to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::DomainError(format!("{x} does not fit in 64 bits")))
}

/// Parses a pattern: `name`, `winding_number`, `seifert_matrix` and, when the
/// winding number is 0, `axis_linking`.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let f: PatternFile = serde_json::from_str(text).map_err(|e| parse_err("pattern", e))?;
    let seifert = SeifertForm::new(matrix_from_rows(&f.seifert_matrix)?)?.with_name(f.name.clone());
    let axis = match (f.axis_linking, f.winding_number) {
        (Some(v), _) => v,
        (None, 0) => return Err(Error::Parse("pattern: `axis_linking` is required when `winding_number` is 0".into())),
        (None, _) => vec![0; seifert.dim()],
    };
    Pattern::new(f.name, seifert, f.winding_number, axis.into_iter().map(BigInt::from).collect())
}

pub fn pattern_to_json(p: &Pattern) -> Result<String> {
    let f = PatternFile {
        name: p.name.clone(),
        winding_number: p.winding,
        seifert_matrix: rows_of(p.seifert.matrix())?,
        axis_linking: Some(p.axis_linking.iter().map(big_to_i64).collect::<Result<_>>()?),
    };
    Ok(canonical(&serde_json::to_value(f).expect("serializable")))
}

/// Parses a knot: `name` and `seifert_matrix`.
pub fn parse_knot(text: &str) -> Result<SeifertForm> {
    let f: KnotFile = serde_json::from_str(text).map_err(|e| parse_err("knot", e))?;
    Ok(SeifertForm::new(matrix_from_rows(&f.seifert_matrix)?)?.with_name(f.name))
}

pub fn knot_to_json(name: &str, s: &SeifertForm) -> Result<String> {
    let f = KnotFile { name: name.to_string(), seifert_matrix: rows_of(s.matrix())? };
    Ok(canonical(&serde_json::to_value(f).expect("serializable")))
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_pattern(path: &Path) -> Result<Pattern> {
    parse_pattern(&read_file(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_knot(path: &Path) -> Result<SeifertForm> {
    parse_knot(&read_file(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Pretty-printed JSON with sorted object keys.
pub fn canonical(v: &Value) -> String {
    // serde_json's default map is ordered by key
    serde_json::to_string_pretty(v).expect("serializable")
}
