use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use super::LedgerReport;
use crate::heckepoly::{LiftKind, RatPoly};
use crate::Rational;

/// One lift polynomial keyed by source, kind and prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub source: String,
    pub kind: LiftKind,
    pub l: u64,
    pub coeffs: Vec<Rational>,
}

type Key = (String, LiftKind, u64);

/// Substitution applied to external polynomials before comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub enum ChangeOfVariable {
    #[default]
    Identity,
    /// `T -> s·T`
    Scale(Rational),
    /// `T -> l^e·T` at each prime l
    PrimePower(i32),
}

impl ChangeOfVariable {
    fn apply(&self, l: u64, coeffs: &[Rational]) -> Vec<Rational> {
        let s = match *self {
            ChangeOfVariable::Identity => return RatPoly::new(coeffs.to_vec()).coeffs().to_vec(),
            ChangeOfVariable::Scale(s) => s,
            ChangeOfVariable::PrimePower(e) => Rational::from_integer(l as i128).pow(e),
        };
        RatPoly::new(coeffs.to_vec()).scale_variable(s).coeffs().to_vec()
    }
}


#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub source: String,
    pub kind: LiftKind,
    pub l: u64,
    pub ours: Vec<Rational>,
    pub theirs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchSummary {
    pub matched: usize,
    pub mismatches: Vec<Mismatch>,
    /// In the report, absent from the external data.
    pub missing_external: Vec<(String, LiftKind, u64)>,
    /// In the external data, absent from the report (or repeated).
    pub unmatched_external: Vec<(String, LiftKind, u64)>,
}

impl MatchSummary {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty() && self.missing_external.is_empty() && self.unmatched_external.is_empty()
    }
}

/// Every lift polynomial in the report, in report order.
pub fn report_family(report: &LedgerReport) -> Vec<FamilyEntry> {
    report
        .constituents
        .iter()
        .flat_map(|c| &c.lifts)
        .flat_map(|lift| {
            lift.polynomial_family.iter().map(move |(&l, p)| FamilyEntry {
                source: lift.source.clone(),
                kind: lift.kind,
                l,
                coeffs: p.coeffs().to_vec(),
            })
        })
        .collect()
}

/// Exact coefficient comparison of the report's lift polynomials against `external`.
pub fn compare_external(report: &LedgerReport, external: &[FamilyEntry], cov: ChangeOfVariable) -> MatchSummary {
    compare_families(&report_family(report), external, cov)
}

/// Same as [`compare_external`] with our side given as a polynomial list.
pub fn compare_families(ours_family: &[FamilyEntry], external: &[FamilyEntry], cov: ChangeOfVariable) -> MatchSummary {
    let mut theirs: BTreeMap<Key, Vec<Rational>> = BTreeMap::new();
    let mut summary = MatchSummary::default();
    for e in external {
        let key = (e.source.clone(), e.kind, e.l);
        match theirs.entry(key) {
            Entry::Occupied(o) => summary.unmatched_external.push(o.key().clone()),
            Entry::Vacant(v) => {
                v.insert(cov.apply(e.l, &e.coeffs));
            }
        }
    }
    for ours in ours_family.iter().cloned() {
        let key = (ours.source.clone(), ours.kind, ours.l);
        match theirs.remove(&key) {
            Some(t) if t == ours.coeffs => summary.matched += 1,
            Some(t) => summary.mismatches.push(Mismatch {
                source: ours.source,
                kind: ours.kind,
                l: ours.l,
                ours: ours.coeffs,
                theirs: t,
            }),
            None => summary.missing_external.push(key),
        }
    }
    summary.unmatched_external.extend(theirs.into_keys());
    summary
}

/// Constant term 1 check used on ingested polynomials.
pub fn is_normalized(coeffs: &[Rational]) -> bool {
    coeffs.first().is_some_and(One::is_one)
}
