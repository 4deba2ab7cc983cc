//! Space summary JSON, eigensystem CSV and the combined `modsym/1` document.

use std::collections::BTreeMap;

use hecke_core::modsym::{EigenReport, EigenSystem, ManinBasisSpace};
use hecke_core::Rational;
use serde::{Deserialize, Serialize};

use super::{expect_schema, rational_to_string, FormatError};

pub const MODSYM_SCHEMA: &str = "modsym/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSummary {
    pub level: u64,
    pub k: usize,
    pub quotient_dim: usize,
    pub cuspidal_dim: usize,
    pub eisenstein_dim: usize,
}

impl SpaceSummary {
    pub fn of(space: &ManinBasisSpace) -> Self {
        SpaceSummary {
            level: space.level(),
            k: space.k(),
            quotient_dim: space.quotient_dim(),
            cuspidal_dim: space.cuspidal_dim(),
            eisenstein_dim: space.eisenstein_dim(),
        }
    }
}

/// Header `level,weight,dim,prime,eigenvalue`, one row per (system, prime).
pub fn eigen_csv(systems: &[EigenSystem]) -> Result<String, FormatError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["level", "weight", "dim", "prime", "eigenvalue"])?;
    for s in systems {
        for (l, a) in &s.eigenvalues {
            w.write_record([
                s.level.to_string(),
                s.weight.to_string(),
                s.dim.to_string(),
                l.to_string(),
                rational_to_string(a),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| FormatError::Invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub dim: usize,
    pub eigenvalues: BTreeMap<u64, String>,
    /// Present when computed; only its vanishing is basis independent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub winding_pairing: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModsymJson {
    pub schema: String,
    pub summary: SpaceSummary,
    pub weight: usize,
    pub primes: Vec<u64>,
    pub eigensystems: Vec<SystemJson>,
    pub nonrational_dim: usize,
    pub nonrational_charpolys: BTreeMap<u64, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vanishing_forms: Option<usize>,
}

impl ModsymJson {
    pub fn new(
        space: &ManinBasisSpace,
        primes: &[u64],
        report: &EigenReport,
        pairings: Option<&[Rational]>,
        vanishing_forms: Option<usize>,
    ) -> Self {
        let eigensystems = report
            .systems
            .iter()
            .enumerate()
            .map(|(i, s)| SystemJson {
                dim: s.dim,
                eigenvalues: s.eigenvalues.iter().map(|(l, a)| (*l, rational_to_string(a))).collect(),
                winding_pairing: pairings.map(|p| rational_to_string(&p[i])),
            })
            .collect();
        ModsymJson {
            schema: MODSYM_SCHEMA.into(),
            summary: SpaceSummary::of(space),
            weight: space.weight(),
            primes: primes.to_vec(),
            eigensystems,
            nonrational_dim: report.nonrational_dim,
            nonrational_charpolys: report
                .nonrational_charpolys
                .iter()
                .map(|(l, c)| (*l, c.iter().map(i128::to_string).collect()))
                .collect(),
            vanishing_forms,
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let doc: ModsymJson = serde_json::from_str(text)?;
        expect_schema(&doc.schema, MODSYM_SCHEMA)?;
        Ok(doc)
    }
}
