//! `ledger/1` reports, `family/1` polynomial lists, `compare/1` summaries and range tables.

use std::collections::BTreeMap;

use hecke_core::ledger::{FamilyEntry, LedgerReport, MatchSummary, RangeTable};
use serde::{Deserialize, Serialize};

use super::poly::{lift_kind_from_name, PolyJson};
use super::{expect_schema, parse_rationals, rational_to_string, rationals_to_strings, schema_of, FormatError};

pub const LEDGER_SCHEMA: &str = "ledger/1";
pub const FAMILY_SCHEMA: &str = "family/1";
pub const COMPARE_SCHEMA: &str = "compare/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftJson {
    pub kind: String,
    pub polynomials: Vec<PolyJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentJson {
    pub kind: String,
    pub source: String,
    pub multiplicity: u64,
    pub eigenvalues: BTreeMap<u64, Vec<String>>,
    pub lifts: Vec<LiftJson>,
    pub charpolys: BTreeMap<u64, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedJson {
    pub source: String,
    pub forms: u64,
    pub eigenvalues: BTreeMap<u64, String>,
    pub winding_pairing: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamodularJson {
    pub p: u64,
    pub dim_s3: u64,
    pub dim_gritsenko: Option<u64>,
    pub dim_non_gritsenko: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerJson {
    pub schema: String,
    pub level: u64,
    pub primes: Vec<u64>,
    pub tally_label: String,
    pub dim_eisenstein_predicted: u64,
    pub dim_non_eisenstein_predicted: Option<u64>,
    pub weight2_forms: u64,
    pub weight2_rational_systems: u64,
    pub weight4_forms: u64,
    pub weight4_vanishing_forms: u64,
    pub constituents: Vec<ConstituentJson>,
    pub excluded: Vec<ExcludedJson>,
    pub excluded_unsplit_forms: u64,
    pub paramodular: ParamodularJson,
    pub caveats: Vec<String>,
}

impl LedgerJson {
    pub fn of(r: &LedgerReport) -> Self {
        let constituents = r
            .constituents
            .iter()
            .map(|c| ConstituentJson {
                kind: c.kind.name().into(),
                source: c.source.clone(),
                multiplicity: c.multiplicity,
                eigenvalues: c.eigenvalues.iter().map(|(l, v)| (*l, rationals_to_strings(v))).collect(),
                lifts: c
                    .lifts
                    .iter()
                    .map(|lift| LiftJson {
                        kind: lift.kind.name().into(),
                        polynomials: lift.polynomial_family.values().map(PolyJson::of).collect(),
                    })
                    .collect(),
                charpolys: c.charpolys.iter().map(|(l, p)| (*l, p.iter().map(i128::to_string).collect())).collect(),
            })
            .collect();
        let excluded = r
            .excluded
            .iter()
            .map(|e| ExcludedJson {
                source: e.source.clone(),
                forms: e.forms,
                eigenvalues: e.eigenvalues.iter().map(|(l, a)| (*l, rational_to_string(a))).collect(),
                winding_pairing: rational_to_string(&e.pairing),
            })
            .collect();
        LedgerJson {
            schema: LEDGER_SCHEMA.into(),
            level: r.level,
            primes: r.primes.clone(),
            tally_label: r.tally_label().into(),
            dim_eisenstein_predicted: r.dim_eisenstein_predicted,
            dim_non_eisenstein_predicted: r.dim_non_eisenstein_predicted,
            weight2_forms: r.weight2_forms,
            weight2_rational_systems: r.weight2_rational_systems,
            weight4_forms: r.weight4_forms,
            weight4_vanishing_forms: r.weight4_vanishing_forms,
            constituents,
            excluded,
            excluded_unsplit_forms: r.excluded_unsplit_forms,
            paramodular: ParamodularJson {
                p: r.paramodular.p,
                dim_s3: r.paramodular.dim_s3,
                dim_gritsenko: r.paramodular.dim_gritsenko,
                dim_non_gritsenko: r.paramodular.dim_non_gritsenko,
            },
            caveats: r.caveats.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let doc: LedgerJson = serde_json::from_str(text)?;
        expect_schema(&doc.schema, LEDGER_SCHEMA)?;
        Ok(doc)
    }

    /// Every lift polynomial, in document order.
    pub fn family(&self) -> Result<Vec<FamilyEntry>, FormatError> {
        let mut out = Vec::new();
        for c in &self.constituents {
            for lift in &c.lifts {
                let kind = lift_kind_from_name(&lift.kind)?;
                for p in &lift.polynomials {
                    out.push(FamilyEntry { source: c.source.clone(), kind, l: p.l, coeffs: parse_rationals(&p.coeffs)? });
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPolyJson {
    pub source: String,
    pub kind: String,
    pub l: u64,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub schema: String,
    pub polynomials: Vec<FamilyPolyJson>,
}

impl FamilyJson {
    pub fn of(entries: &[FamilyEntry]) -> Self {
        FamilyJson {
            schema: FAMILY_SCHEMA.into(),
            polynomials: entries
                .iter()
                .map(|e| FamilyPolyJson {
                    source: e.source.clone(),
                    kind: e.kind.name().into(),
                    l: e.l,
                    coeffs: rationals_to_strings(&e.coeffs),
                })
                .collect(),
        }
    }

    pub fn entries(&self) -> Result<Vec<FamilyEntry>, FormatError> {
        self.polynomials
            .iter()
            .map(|p| {
                Ok(FamilyEntry {
                    source: p.source.clone(),
                    kind: lift_kind_from_name(&p.kind)?,
                    l: p.l,
                    coeffs: parse_rationals(&p.coeffs)?,
                })
            })
            .collect()
    }
}

/// Polynomial family from either a `ledger/1` report or a `family/1` list.
pub fn parse_family(text: &str) -> Result<Vec<FamilyEntry>, FormatError> {
    match schema_of(text)?.as_str() {
        LEDGER_SCHEMA => LedgerJson::parse(text)?.family(),
        FAMILY_SCHEMA => serde_json::from_str::<FamilyJson>(text)?.entries(),
        other => Err(FormatError::Schema { expected: format!("{LEDGER_SCHEMA} or {FAMILY_SCHEMA}"), found: other.into() }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyJson {
    pub source: String,
    pub kind: String,
    pub l: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub source: String,
    pub kind: String,
    pub l: u64,
    pub ours: Vec<String>,
    pub theirs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareJson {
    pub schema: String,
    pub all_match: bool,
    pub matched: usize,
    pub change_of_variable: String,
    pub mismatches: Vec<MismatchJson>,
    pub missing_external: Vec<KeyJson>,
    pub unmatched_external: Vec<KeyJson>,
}

impl CompareJson {
    pub fn of(s: &MatchSummary, change_of_variable: &str) -> Self {
        let key = |(source, kind, l): &(String, hecke_core::heckepoly::LiftKind, u64)| KeyJson {
            source: source.clone(),
            kind: kind.name().into(),
            l: *l,
        };
        CompareJson {
            schema: COMPARE_SCHEMA.into(),
            all_match: s.all_match(),
            matched: s.matched,
            change_of_variable: change_of_variable.into(),
            mismatches: s
                .mismatches
                .iter()
                .map(|m| MismatchJson {
                    source: m.source.clone(),
                    kind: m.kind.name().into(),
                    l: m.l,
                    ours: rationals_to_strings(&m.ours),
                    theirs: rationals_to_strings(&m.theirs),
                })
                .collect(),
            missing_external: s.missing_external.iter().map(key).collect(),
            unmatched_external: s.unmatched_external.iter().map(key).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeTableJson {
    pub n: usize,
    pub dim_x: usize,
    pub vcd: usize,
    pub cusp_top: Option<usize>,
    pub cusp_bottom: Option<usize>,
}

impl From<&RangeTable> for RangeTableJson {
    fn from(t: &RangeTable) -> Self {
        RangeTableJson { n: t.n, dim_x: t.dim_x, vcd: t.vcd, cusp_top: t.cusp_top, cusp_bottom: t.cusp_bottom }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::to_json;
    use hecke_core::exactlin::PrimeField;
    use hecke_core::ledger::{build_report, compare_external, report_family, ChangeOfVariable};

    #[test]
    fn ledger_document() {
        let report = build_report(11, &[2, 3], None, None, PrimeField::default_field()).unwrap();
        let doc = LedgerJson::of(&report);
        let text = to_json(&doc);
        assert!(text.contains("\"schema\": \"ledger/1\""));
        let back = LedgerJson::parse(&text).unwrap();
        assert_eq!(to_json(&back), text);
        assert_eq!(back.family().unwrap(), report_family(&report));
        assert_eq!(parse_family(&text).unwrap(), report_family(&report));
        let fam = to_json(&FamilyJson::of(&report_family(&report)));
        assert_eq!(parse_family(&fam).unwrap(), report_family(&report));
        let summary = compare_external(&report, &parse_family(&fam).unwrap(), ChangeOfVariable::Identity);
        let cmp = CompareJson::of(&summary, "identity");
        assert!(cmp.all_match);
        assert_eq!(cmp.matched, 4);
    }

    #[test]
    fn foreign_schema_is_rejected() {
        assert!(LedgerJson::parse(r#"{"schema":"ledger/2"}"#).is_err());
        assert!(matches!(parse_family(r#"{"schema":"modsym/1"}"#), Err(FormatError::Schema { .. })));
    }
}
