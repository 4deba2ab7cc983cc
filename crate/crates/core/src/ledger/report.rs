use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use super::LedgerError;
use crate::arith::is_prime;
use crate::exactlin::PrimeField;
use crate::heckepoly::{lift_polynomial, LiftClass, LiftKind, Sl3Datum};
use crate::modsym::{
    eigen_report, sturm_primes, vanishing_count, winding_pairing, EigenReport, ManinBasisSpace,
};
use crate::paramodular::{complement_dims, ParamodularDims};
use crate::Rational;

pub const TALLY_LABEL: &str = "predicted (reconstructed)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstituentKind {
    Weight2,
    Weight4,
    Sl3,
}

impl ConstituentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConstituentKind::Weight2 => "weight2",
            ConstituentKind::Weight4 => "weight4",
            ConstituentKind::Sl3 => "sl3",
        }
    }

    pub fn lifts(&self) -> &'static [LiftKind] {
        match self {
            ConstituentKind::Weight2 => &[LiftKind::Weight2A, LiftKind::Weight2B],
            ConstituentKind::Weight4 => &[LiftKind::Weight4],
            ConstituentKind::Sl3 => &[LiftKind::Sl3A, LiftKind::Sl3B],
        }
    }

    /// Classes contributed per source form.
    pub fn multiplicity_per_form(&self) -> u64 {
        self.lifts().len() as u64
    }
}

/// One predicted summand of H⁵.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub kind: ConstituentKind,
    pub source: String,
    pub multiplicity: u64,
    /// Source eigenvalues per prime: `[a_l]` for GL₂ forms, `[γ, γ′]` for SL₃ classes.
    pub eigenvalues: BTreeMap<u64, Vec<Rational>>,
    /// Empty when the source does not split over ℚ.
    pub lifts: Vec<LiftClass>,
    /// For unsplit sources: integer characteristic polynomial of T_l, constant term first.
    pub charpolys: BTreeMap<u64, Vec<i128>>,
}

impl Constituent {
    pub fn is_split(&self) -> bool {
        self.charpolys.is_empty()
    }
}

/// A rational weight-4 system left out because its winding pairing is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedSystem {
    pub source: String,
    pub forms: u64,
    pub eigenvalues: BTreeMap<u64, Rational>,
    pub pairing: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerReport {
    pub level: u64,
    pub primes: Vec<u64>,
    pub constituents: Vec<Constituent>,
    pub excluded: Vec<ExcludedSystem>,
    /// Unsplit weight-4 forms with nonzero pairing.
    pub excluded_unsplit_forms: u64,
    /// dim S₂(Γ₀(N)).
    pub weight2_forms: u64,
    pub weight2_rational_systems: u64,
    pub weight4_forms: u64,
    pub weight4_vanishing_forms: u64,
    pub paramodular: ParamodularDims,
    pub dim_eisenstein_predicted: u64,
    pub dim_non_eisenstein_predicted: Option<u64>,
    pub caveats: Vec<String>,
}

impl LedgerReport {
    pub fn tally_label(&self) -> &'static str {
        TALLY_LABEL
    }
}

/// Modular-symbol data at one weight, the input to [`assemble_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAnalysis {
    pub level: u64,
    pub k: usize,
    pub quotient_dim: usize,
    pub cuspidal_dim: usize,
    pub eigen: EigenReport,
    /// Winding pairing of each system in `eigen.systems`; empty at weight 2.
    pub pairings: Vec<Rational>,
    /// Newforms with vanishing pairing, all of S_k counted; `None` at weight 2.
    pub vanishing_forms: Option<usize>,
}

fn check_inputs(level: u64, primes: &[u64]) -> Result<(), LedgerError> {
    if !is_prime(level) {
        return Err(LedgerError::LevelNotPrime { level });
    }
    for &l in primes {
        if !is_prime(l) {
            return Err(LedgerError::NotPrime { l });
        }
        if l == level {
            return Err(LedgerError::BadPrime { l, level });
        }
    }
    Ok(())
}

/// Requested primes merged with those up to the Sturm bound.
pub fn splitting_primes(level: u64, weight: usize, primes: &[u64]) -> Vec<u64> {
    let mut all = sturm_primes(level, weight);
    all.extend_from_slice(primes);
    all.sort_unstable();
    all.dedup();
    all
}

/// Space, eigensystems and, for k = 3, winding data at level N.
pub fn analyze_weight(level: u64, k: usize, field: PrimeField, primes: &[u64]) -> Result<WeightAnalysis, LedgerError> {
    check_inputs(level, primes)?;
    let space = ManinBasisSpace::new(level, k, field)?;
    let split = splitting_primes(level, k + 1, primes);
    let eigen = eigen_report(&space, &split)?;
    let (pairings, vanishing_forms) = if k > 1 {
        let pairings = eigen.systems.iter().map(|s| winding_pairing(&space, s)).collect::<Result<Vec<_>, _>>()?;
        let vanishing = if space.cuspidal_dim() == 0 { 0 } else { vanishing_count(&space, &split)? };
        (pairings, Some(vanishing))
    } else {
        (Vec::new(), None)
    };
    Ok(WeightAnalysis {
        level,
        k,
        quotient_dim: space.quotient_dim(),
        cuspidal_dim: space.cuspidal_dim(),
        eigen,
        pairings,
        vanishing_forms,
    })
}

/// Sequential [`analyze_weight`] at k = 1 and k = 3 followed by [`assemble_report`].
pub fn build_report(
    level: u64,
    primes: &[u64],
    sl3: Option<&[Sl3Datum]>,
    gritsenko: Option<u64>,
    field: PrimeField,
) -> Result<LedgerReport, LedgerError> {
    let w2 = analyze_weight(level, 1, field, primes)?;
    let w4 = analyze_weight(level, 3, field, primes)?;
    assemble_report(level, primes, &w2, &w4, sl3, gritsenko)
}

fn gl2_lifts(kind: ConstituentKind, primes: &[u64], eigenvalues: &BTreeMap<u64, Rational>, source: &str) -> Vec<LiftClass> {
    kind.lifts()
        .iter()
        .map(|&lift| LiftClass {
            kind: lift,
            source: source.to_string(),
            polynomial_family: primes
                .iter()
                .map(|&l| (l, lift_polynomial(lift, l, &[eigenvalues[&l]])))
                .collect(),
        })
        .collect()
}

fn restrict(eigenvalues: &BTreeMap<u64, Rational>, primes: &[u64]) -> BTreeMap<u64, Rational> {
    primes.iter().map(|&l| (l, eigenvalues[&l])).collect()
}

fn as_lists(eigenvalues: &BTreeMap<u64, Rational>) -> BTreeMap<u64, Vec<Rational>> {
    eigenvalues.iter().map(|(&l, &a)| (l, alloc::vec![a])).collect()
}

fn restrict_charpolys(all: &BTreeMap<u64, Vec<i128>>, primes: &[u64]) -> BTreeMap<u64, Vec<i128>> {
    primes.iter().filter_map(|l| all.get(l).map(|c| (*l, c.clone()))).collect()
}

/// Combines the weight-2 and weight-4 analyses with SL₃ and Gritsenko data.
pub fn assemble_report(
    level: u64,
    primes: &[u64],
    w2: &WeightAnalysis,
    w4: &WeightAnalysis,
    sl3: Option<&[Sl3Datum]>,
    gritsenko: Option<u64>,
) -> Result<LedgerReport, LedgerError> {
    check_inputs(level, primes)?;
    if w2.level != level || w4.level != level || w2.k != 1 || w4.k != 3 {
        return Err(LedgerError::AnalysisMismatch);
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut constituents = Vec::new();
    let mut caveats = Vec::new();
    let mut noninteger = false;

    // weight 2
    for (i, s) in w2.eigen.systems.iter().enumerate() {
        let source = format!("{level}.2.{}", i + 1);
        let ev = restrict(&s.eigenvalues, &primes);
        noninteger |= ev.values().any(|a| !a.is_integer());
        constituents.push(Constituent {
            kind: ConstituentKind::Weight2,
            multiplicity: 2 * s.form_count() as u64,
            lifts: gl2_lifts(ConstituentKind::Weight2, &primes, &ev, &source),
            eigenvalues: as_lists(&ev),
            charpolys: BTreeMap::new(),
            source,
        });
    }
    if w2.eigen.nonrational_dim > 0 {
        constituents.push(Constituent {
            kind: ConstituentKind::Weight2,
            source: format!("{level}.2.unsplit"),
            multiplicity: w2.eigen.nonrational_dim as u64,
            eigenvalues: BTreeMap::new(),
            lifts: Vec::new(),
            charpolys: restrict_charpolys(&w2.eigen.nonrational_charpolys, &primes),
        });
    }

    // weight 4
    let mut excluded = Vec::new();
    let mut rational_vanishing = 0u64;
    for (i, (s, pairing)) in w4.eigen.systems.iter().zip(&w4.pairings).enumerate() {
        let source = format!("{level}.4.{}", i + 1);
        let ev = restrict(&s.eigenvalues, &primes);
        if pairing.is_zero() {
            noninteger |= ev.values().any(|a| !a.is_integer());
            rational_vanishing += s.form_count() as u64;
            constituents.push(Constituent {
                kind: ConstituentKind::Weight4,
                multiplicity: s.form_count() as u64,
                lifts: gl2_lifts(ConstituentKind::Weight4, &primes, &ev, &source),
                eigenvalues: as_lists(&ev),
                charpolys: BTreeMap::new(),
                source,
            });
        } else {
            excluded.push(ExcludedSystem { source, forms: s.form_count() as u64, eigenvalues: ev, pairing: *pairing });
        }
    }
    let weight4_vanishing = w4.vanishing_forms.unwrap_or(0) as u64;
    let unsplit_forms4 = (w4.eigen.nonrational_dim / 2) as u64;
    let unsplit_vanishing = weight4_vanishing
        .checked_sub(rational_vanishing)
        .filter(|&v| v <= unsplit_forms4)
        .ok_or(LedgerError::InconsistentVanishing)?;
    if unsplit_vanishing > 0 {
        constituents.push(Constituent {
            kind: ConstituentKind::Weight4,
            source: format!("{level}.4.unsplit"),
            multiplicity: unsplit_vanishing,
            eigenvalues: BTreeMap::new(),
            lifts: Vec::new(),
            charpolys: restrict_charpolys(&w4.eigen.nonrational_charpolys, &primes),
        });
    }

    // SL3
    match sl3 {
        None => caveats.push("no SL3 data supplied: SL3 lift constituents are unknown, not absent".to_string()),
        Some(data) => {
            for (i, datum) in data.iter().filter(|d| d.level == level).enumerate() {
                let source = format!("sl3:{level}.{}", i + 1);
                let present: Vec<u64> = primes.iter().copied().filter(|l| datum.eigenvalues.contains_key(l)).collect();
                if present.len() < primes.len() {
                    caveats.push(format!("{source}: no SL3 eigenvalues at some requested primes"));
                }
                let eigenvalues: BTreeMap<u64, Vec<Rational>> =
                    present.iter().map(|l| (*l, { let (g, h) = datum.eigenvalues[l]; alloc::vec![g, h] })).collect();
                noninteger |= eigenvalues.values().flatten().any(|a| !a.is_integer());
                let lifts = ConstituentKind::Sl3
                    .lifts()
                    .iter()
                    .map(|&lift| LiftClass {
                        kind: lift,
                        source: source.clone(),
                        polynomial_family: eigenvalues
                            .iter()
                            .map(|(&l, gg)| (l, lift_polynomial(lift, l, gg)))
                            .collect(),
                    })
                    .collect();
                constituents.push(Constituent {
                    kind: ConstituentKind::Sl3,
                    multiplicity: ConstituentKind::Sl3.multiplicity_per_form(),
                    eigenvalues,
                    lifts,
                    charpolys: BTreeMap::new(),
                    source,
                });
            }
        }
    }

    // paramodular
    let paramodular = complement_dims(level, gritsenko)?;
    let dim_non_eisenstein_predicted = paramodular.dim_non_gritsenko.map(|d| 2 * d);
    if gritsenko.is_none() {
        caveats.push(format!("no Gritsenko dimension for p = {level}: non-Eisenstein contribution unknown"));
    }

    if w2.eigen.nonrational_dim > 0 || w4.eigen.nonrational_dim > 0 {
        caveats.push(
            "some eigensystems do not split over Q: reported by characteristic polynomial without lift polynomials"
                .to_string(),
        );
        caveats.push(format!(
            "weight-2 count uses dim S2 = {}; {} rational newform system(s) found",
            w2.cuspidal_dim / 2,
            w2.eigen.systems.len()
        ));
    }
    if w2.eigen.jordan_defects + w4.eigen.jordan_defects > 0 {
        caveats.push("Hecke operators on cusp forms showed nontrivial Jordan blocks".to_string());
    }
    if w2.eigen.systems.iter().chain(&w4.eigen.systems).any(|s| !s.satisfies_ramanujan()) {
        caveats.push("an eigenvalue exceeds the Ramanujan bound".to_string());
    }
    if noninteger {
        caveats.push("some source eigenvalues are not integers".to_string());
    }
    caveats.push("weight-4 constituents counted once per newform (half the symbol eigenspace dimension)".to_string());
    caveats.push("vanishing winding pairing is a two-prime certificate, not a proof".to_string());

    let dim_eisenstein_predicted = constituents.iter().map(|c| c.multiplicity).sum();
    Ok(LedgerReport {
        level,
        primes,
        constituents,
        excluded,
        excluded_unsplit_forms: unsplit_forms4 - unsplit_vanishing,
        weight2_forms: (w2.cuspidal_dim / 2) as u64,
        weight2_rational_systems: w2.eigen.systems.len() as u64,
        weight4_forms: (w4.cuspidal_dim / 2) as u64,
        weight4_vanishing_forms: weight4_vanishing,
        paramodular,
        dim_eisenstein_predicted,
        dim_non_eisenstein_predicted,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckepoly::{matches_shape, weight2_lifts};

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn level_eleven() {
        let report = build_report(11, &[2, 3], None, None, PrimeField::default_field()).unwrap();
        let w2: Vec<_> = report.constituents.iter().filter(|c| c.kind == ConstituentKind::Weight2).collect();
        assert_eq!(w2.len(), 1);
        assert_eq!(w2[0].multiplicity, 2);
        assert_eq!(w2[0].eigenvalues[&2], [r(-2)]);
        assert_eq!(w2[0].lifts[0].polynomial_family[&2], weight2_lifts(2, r(-2)).0);
        assert_eq!(w2[0].lifts[1].polynomial_family[&3], weight2_lifts(3, r(-1)).1);
        // S4(11) is one Galois pair, both with nonzero central value
        assert_eq!((report.weight4_forms, report.weight4_vanishing_forms), (2, 0));
        assert!(report.constituents.iter().all(|c| c.kind != ConstituentKind::Weight4));
        assert_eq!(report.excluded_unsplit_forms, 2);
        assert_eq!(report.dim_eisenstein_predicted, 2);
        assert_eq!(report.dim_non_eisenstein_predicted, None);
    }

    #[test]
    fn level_thirteen_weight_four_lift() {
        let report = build_report(13, &[2], None, Some(0), PrimeField::default_field()).unwrap();
        assert_eq!(report.weight2_forms, 0);
        let w4: Vec<_> = report.constituents.iter().filter(|c| c.kind == ConstituentKind::Weight4).collect();
        assert_eq!(w4.len(), 1);
        assert_eq!((w4[0].multiplicity, w4[0].eigenvalues[&2][0]), (1, r(-5)));
        assert_eq!(report.dim_eisenstein_predicted, 1);
        assert_eq!(report.dim_non_eisenstein_predicted, Some(2));
        for c in &report.constituents {
            for lift in &c.lifts {
                for (l, p) in &lift.polynomial_family {
                    assert!(matches_shape(lift.kind, p, &c.eigenvalues[l]));
                }
            }
        }
    }

    #[test]
    fn sl3_data_and_degradation() {
        let datum = Sl3Datum { level: 11, eigenvalues: [(2, (r(1), r(1))), (3, (r(0), r(0)))].into_iter().collect() };
        let other = Sl3Datum { level: 7, eigenvalues: BTreeMap::new() };
        let data = [datum, other];
        let with = build_report(11, &[2, 3], Some(&data), None, PrimeField::default_field()).unwrap();
        let without = build_report(11, &[2, 3], None, None, PrimeField::default_field()).unwrap();
        let sl3: Vec<_> = with.constituents.iter().filter(|c| c.kind == ConstituentKind::Sl3).collect();
        assert_eq!(sl3.len(), 1);
        assert_eq!(sl3[0].multiplicity, 2);
        assert_eq!(with.dim_eisenstein_predicted, without.dim_eisenstein_predicted + 2);
        assert_eq!(without.caveats.len(), with.caveats.len() + 1);
    }

    #[test]
    fn tiny_levels() {
        for (n, g) in [(2, Some(0)), (5, Some(0)), (3, None)] {
            let report = build_report(n, &[], None, g, PrimeField::default_field()).unwrap();
            assert_eq!(report.paramodular.dim_s3, 0);
            assert_eq!(report.dim_eisenstein_predicted, 0);
            assert_eq!(report.dim_non_eisenstein_predicted, g.map(|_| 0));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = PrimeField::default_field();
        assert_eq!(build_report(12, &[5], None, None, f), Err(LedgerError::LevelNotPrime { level: 12 }));
        assert_eq!(build_report(11, &[11], None, None, f), Err(LedgerError::BadPrime { l: 11, level: 11 }));
        assert_eq!(build_report(11, &[4], None, None, f), Err(LedgerError::NotPrime { l: 4 }));
    }
}
