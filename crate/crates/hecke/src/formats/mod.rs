//! File and wire formats. Rationals travel as decimal strings `a` or `a/b`;
//! JSON documents that can be read back carry a versioned `schema` field.

use hecke_core::Rational;

pub mod data;
pub mod ledger;
pub mod modsym;
pub mod poly;
pub mod triples;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("bad rational {0:?}")]
    Rational(String),
    #[error("unknown lift kind {0:?}")]
    LiftKind(String),
    #[error("expected schema {expected:?}, found {found:?}")]
    Schema { expected: String, found: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    s.trim().parse::<Rational>().map_err(|_| FormatError::Rational(s.to_string()))
}

pub fn rationals_to_strings(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(rational_to_string).collect()
}

pub fn parse_rationals(ss: &[String]) -> Result<Vec<Rational>, FormatError> {
    ss.iter().map(|s| parse_rational(s)).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Reads `schema` without committing to a document type.
pub fn schema_of(text: &str) -> Result<String, FormatError> {
    #[derive(serde::Deserialize)]
    struct Probe {
        schema: Option<String>,
    }
    let probe: Probe = serde_json::from_str(text)?;
    probe.schema.ok_or_else(|| FormatError::Invalid("missing \"schema\" field".into()))
}

pub(crate) fn expect_schema(found: &str, expected: &str) -> Result<(), FormatError> {
    if found == expected {
        Ok(())
    } else {
        Err(FormatError::Schema { expected: expected.into(), found: found.into() })
    }
}
