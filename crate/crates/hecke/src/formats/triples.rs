//! Sparse triple text: a `rows cols nnz` header, then `nnz` lines `i j value`,
//! 0-indexed, values as canonical field representatives.

use std::fmt::Write as _;

use hecke_core::exactlin::{FieldMatrix, PrimeField};

use super::FormatError;

pub fn write_triples(m: &FieldMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.nrows(), m.ncols(), m.nnz());
    for (i, j, v) in m.triples() {
        writeln!(out, "{i} {j} {v}").expect("writing to a String");
    }
    out
}

fn numbers<const N: usize>(line: &str, lineno: usize) -> Result<[u64; N], FormatError> {
    let bad = |message: String| FormatError::Line { line: lineno, message };
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(bad(format!("expected {N} fields, found {}", fields.len())));
    }
    let mut out = [0u64; N];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| bad(format!("not a nonnegative integer: {f:?}")))?;
    }
    Ok(out)
}

/// Blank lines and lines starting with `#` are ignored.
pub fn parse_triples(field: PrimeField, text: &str) -> Result<FieldMatrix, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| FormatError::Invalid("empty triple file".into()))?;
    let [rows, cols, nnz] = numbers::<3>(header, hline)?;
    let mut triples = Vec::with_capacity(nnz as usize);
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, line) in lines {
        let [i, j, v] = numbers::<3>(line, lineno)?;
        let bad = |message: &str| FormatError::Line { line: lineno, message: message.into() };
        if i >= rows || j >= cols {
            return Err(bad("index out of bounds"));
        }
        if v == 0 || v >= field.modulus() {
            return Err(bad("value must be a nonzero field representative"));
        }
        if !seen.insert((i, j)) {
            return Err(bad("repeated entry"));
        }
        triples.push((i as usize, j as usize, v));
    }
    if triples.len() as u64 != nnz {
        return Err(FormatError::Invalid(format!("header says {nnz} entries, found {}", triples.len())));
    }
    FieldMatrix::from_triples(field, rows as usize, cols as usize, triples).map_err(|e| FormatError::Invalid(e.to_string()))
}
