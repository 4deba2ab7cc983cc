//! The predicted decomposition of H⁵(Γ₀(N); ℂ) for SL₄ at prime level N:
//! Eisenstein lifts from weight-2, weight-4 and SL₃ classes with their Hecke
//! polynomial families, the paramodular contribution, and the SL_n range table.

use core::fmt;

mod compare;
mod range;
mod report;

pub use compare::{compare_external, compare_families, is_normalized, report_family, ChangeOfVariable, FamilyEntry, MatchSummary, Mismatch};
pub use range::{range_table, RangeTable};
pub use report::{
    analyze_weight, assemble_report, build_report, splitting_primes, Constituent, ConstituentKind, ExcludedSystem,
    LedgerReport, WeightAnalysis, TALLY_LABEL,
};

use crate::modsym::ModSymError;
use crate::paramodular::ParamodularError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LedgerError {
    InvalidRank { n: usize },
    /// n > 9: computed fields are in `partial`, the cuspidal range is not.
    CuspRangeUnknown { partial: RangeTable },
    LevelNotPrime { level: u64 },
    NotPrime { l: u64 },
    BadPrime { l: u64, level: u64 },
    /// The weight analyses do not belong to this level, or are at the wrong weights.
    AnalysisMismatch,
    /// Vanishing count and per-system pairings disagree.
    InconsistentVanishing,
    ModSym(ModSymError),
    Paramodular(ParamodularError),
}

impl From<ModSymError> for LedgerError {
    fn from(e: ModSymError) -> Self {
        LedgerError::ModSym(e)
    }
}

impl From<ParamodularError> for LedgerError {
    fn from(e: ParamodularError) -> Self {
        LedgerError::Paramodular(e)
    }
}

impl fmt::Display for LedgerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LedgerError::InvalidRank { n } => write!(f, "rank n = {n} must be at least 2"),
            LedgerError::CuspRangeUnknown { partial } => {
                write!(f, "cuspidal range unknown for n = {} (dim X = {}, vcd = {})", partial.n, partial.dim_x, partial.vcd)
            }
            LedgerError::LevelNotPrime { level } => write!(f, "level {level} is not prime"),
            LedgerError::NotPrime { l } => write!(f, "{l} is not prime"),
            LedgerError::BadPrime { l, level } => write!(f, "prime {l} divides the level {level}"),
            LedgerError::AnalysisMismatch => f.write_str("weight analyses do not match the requested level"),
            LedgerError::InconsistentVanishing => f.write_str("winding pairings disagree with the vanishing count"),
            LedgerError::ModSym(e) => write!(f, "modular symbols: {e}"),
            LedgerError::Paramodular(e) => write!(f, "paramodular: {e}"),
        }
    }
}

impl core::error::Error for LedgerError {}
