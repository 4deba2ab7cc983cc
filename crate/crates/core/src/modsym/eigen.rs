use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{ManinBasisSpace, ModSymError};
use crate::arith::{is_prime, prime_divisors};
use crate::exactlin::poly::{charpoly, FpPoly};
use crate::exactlin::{
    default_reconstruction_bound, rank_and_kernel, rational_reconstruct, restrict_operator, split_eigenspaces,
    FieldMatrix, PrimeField, SparseVec, Subspace,
};
use crate::Rational;

/// A simultaneous eigenspace of the Hecke operators on cusp forms, with exact eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSystem {
    pub level: u64,
    pub weight: usize,
    pub eigenvalues: BTreeMap<u64, Rational>,
    pub cuspidal: bool,
    /// Dimension of the eigenspace in the symbol space (2 per newform).
    pub dim: usize,
}

impl EigenSystem {
    /// `a_l² <= 4 l^(w-1)` at every stored prime.
    pub fn satisfies_ramanujan(&self) -> bool {
        self.eigenvalues.iter().all(|(&l, a)| {
            let bound = 4 * (l as i128).pow(self.weight as u32 - 1);
            // (n/d)² <= B  <=>  n² <= B d²
            a.numer() * a.numer() <= bound * a.denom() * a.denom()
        })
    }

    /// Number of newforms carrying this system.
    pub fn form_count(&self) -> usize {
        self.dim / 2
    }
}

/// Cuspidal eigensystems together with the part that does not split over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub systems: Vec<EigenSystem>,
    /// Cuspidal dimension not covered by systems confirmed at both field primes.
    pub nonrational_dim: usize,
    /// Integer characteristic polynomial of each T_l on that part, constant term first.
    pub nonrational_charpolys: BTreeMap<u64, Vec<i128>>,
    /// Jordan blocks met while splitting (expected empty on cusp forms).
    pub jordan_defects: usize,
}

/// One [`EigenSystem`] per rational simultaneous eigenspace of `{T_l}` on cusp forms.
pub fn eigensystems(space: &ManinBasisSpace, primes: &[u64]) -> Result<Vec<EigenSystem>, ModSymError> {
    Ok(eigen_report(space, primes)?.systems)
}

struct FieldSplit {
    tuples: BTreeMap<Vec<Rational>, usize>,
    charpolys: Vec<FpPoly>,
    defects: usize,
}

fn check_primes(space: &ManinBasisSpace, primes: &[u64]) -> Result<(), ModSymError> {
    if primes.is_empty() {
        return Err(ModSymError::NoPrimes);
    }
    for &l in primes {
        if !is_prime(l) {
            return Err(ModSymError::NotPrime { l });
        }
        if space.level().is_multiple_of(l) {
            return Err(ModSymError::BadPrime { l, level: space.level() });
        }
    }
    Ok(())
}

fn split_at(space: &ManinBasisSpace, primes: &[u64]) -> Result<FieldSplit, ModSymError> {
    let field = *space.field();
    let cusp = space.cuspidal_subspace();
    let ops = primes
        .iter()
        .map(|&l| Ok(restrict_operator(&space.hecke_operator(l)?, cusp)?))
        .collect::<Result<Vec<_>, ModSymError>>()?;
    let charpolys = ops.iter().map(|t| charpoly(&field, &t.to_dense())).collect();
    let decomposition = split_eigenspaces(&ops)?;
    let bound = default_reconstruction_bound(&field);
    let mut tuples = BTreeMap::new();
    for e in &decomposition.spaces {
        let lifted: Option<Vec<Rational>> =
            e.eigenvalues.iter().map(|&v| rational_reconstruct(&field, v, bound).ok()).collect();
        if let Some(t) = lifted {
            *tuples.entry(t).or_insert(0) += e.space.dim();
        }
    }
    Ok(FieldSplit { tuples, charpolys, defects: decomposition.defects.len() })
}

/// Like [`eigensystems`], also describing what stays unsplit over ℚ.
pub fn eigen_report(space: &ManinBasisSpace, primes: &[u64]) -> Result<EigenReport, ModSymError> {
    check_primes(space, primes)?;
    let empty = EigenReport {
        systems: Vec::new(),
        nonrational_dim: 0,
        nonrational_charpolys: BTreeMap::new(),
        jordan_defects: 0,
    };
    if space.cuspidal_dim() == 0 {
        return Ok(empty);
    }
    let other = space.companion()?;
    let a = split_at(space, primes)?;
    let b = split_at(&other, primes)?;
    let mut systems = Vec::new();
    for (tuple, &dim) in &a.tuples {
        if b.tuples.get(tuple) == Some(&dim) {
            systems.push(EigenSystem {
                level: space.level(),
                weight: space.weight(),
                eigenvalues: primes.iter().copied().zip(tuple.iter().copied()).collect(),
                cuspidal: true,
                dim,
            });
        }
    }
    sort_systems(&mut systems, primes);
    let confirmed: usize = systems.iter().map(|s| s.dim).sum();
    let nonrational_dim = space.cuspidal_dim() - confirmed;
    let mut nonrational_charpolys = BTreeMap::new();
    if nonrational_dim > 0 {
        for (idx, &l) in primes.iter().enumerate() {
            let mut poly = crt_poly(space.field(), &a.charpolys[idx], other.field(), &b.charpolys[idx]);
            for s in &systems {
                let ev = s.eigenvalues[&l];
                if ev.is_integer() {
                    for _ in 0..s.dim {
                        poly = divide_linear(&poly, *ev.numer()).ok_or(ModSymError::FieldDisagreement)?;
                    }
                }
            }
            nonrational_charpolys.insert(l, poly);
        }
    }
    Ok(EigenReport { systems, nonrational_dim, nonrational_charpolys, jordan_defects: a.defects.max(b.defects) })
}

/// Order systems by their eigenvalue at the listed primes, as rationals.
fn sort_systems(systems: &mut [EigenSystem], primes: &[u64]) {
    systems.sort_by(|x, y| {
        let kx: Vec<_> = primes.iter().map(|l| x.eigenvalues[l]).collect();
        let ky: Vec<_> = primes.iter().map(|l| y.eigenvalues[l]).collect();
        kx.cmp(&ky)
    });
}

fn crt_poly(f1: &PrimeField, p1: &FpPoly, f2: &PrimeField, p2: &FpPoly) -> Vec<i128> {
    let n = p1.coeffs().len().max(p2.coeffs().len());
    (0..n)
        .map(|i| crt(f1, p1.coeffs().get(i).copied().unwrap_or(0), f2, p2.coeffs().get(i).copied().unwrap_or(0)))
        .collect()
}

/// Symmetric lift of `x ≡ r1 (p1)`, `x ≡ r2 (p2)`.
pub(crate) fn crt(f1: &PrimeField, r1: u64, f2: &PrimeField, r2: u64) -> i128 {
    let (m1, m2) = (f1.modulus(), f2.modulus());
    let t = f2.mul(f2.sub(r2 % m2, r1 % m2), f2.inv(m1 % m2));
    let m = m1 as u128 * m2 as u128;
    let x = r1 as u128 + m1 as u128 * t as u128;
    if x > m / 2 {
        x as i128 - m as i128
    } else {
        x as i128
    }
}

/// Quotient by `x - a`, if exact.
fn divide_linear(poly: &[i128], a: i128) -> Option<Vec<i128>> {
    let n = poly.len();
    if n < 2 {
        return None;
    }
    let mut q = alloc::vec![0i128; n - 1];
    let mut carry = 0i128;
    for i in (1..n).rev() {
        carry = poly[i].checked_add(carry.checked_mul(a)?)?;
        q[i - 1] = carry;
    }
    (poly[0].checked_add(carry.checked_mul(a)?)? == 0).then_some(q)
}

/// Pairing of the system's eigenspace with the winding element.
///
/// The dual eigenspace `{φ : φ T_l = a_l φ}` on the full quotient is taken in
/// canonical reduced echelon form; the result is the first nonzero `φ(e)`, or 0.
/// It is computed at two field primes and both must reconstruct to the same
/// rational. Only the vanishing is meaningful: the scale depends on the basis.
pub fn winding_pairing(space: &ManinBasisSpace, system: &EigenSystem) -> Result<Rational, ModSymError> {
    if space.k().is_multiple_of(2) {
        return Err(ModSymError::NoCentralMonomial { k: space.k() });
    }
    if system.level != space.level() || system.weight != space.weight() {
        return Err(ModSymError::SystemMismatch);
    }
    if system.eigenvalues.is_empty() {
        return Err(ModSymError::NoPrimes);
    }
    let first = pairing_at(space, system)?;
    let second = pairing_at(&space.companion()?, system)?;
    match (first, second) {
        (Some(x), Some(y)) if x == y => Ok(x),
        _ => Err(ModSymError::FieldDisagreement),
    }
}

/// `Some(value)` when it reconstructs, `None` otherwise.
fn pairing_at(space: &ManinBasisSpace, system: &EigenSystem) -> Result<Option<Rational>, ModSymError> {
    let f = *space.field();
    let n = space.quotient_dim();
    let mut rows = Vec::new();
    for (&l, a) in &system.eigenvalues {
        let lambda = f.from_rational(a).ok_or(ModSymError::DenominatorVanishes)?;
        let shifted = space.hecke_operator(l)?.transpose().shifted(lambda);
        rows.extend(shifted.rows().iter().cloned());
    }
    let (_, dual) = rank_and_kernel(&FieldMatrix::from_rows(f, n, rows));
    if dual.dim() == 0 {
        return Err(ModSymError::NotAnEigensystem);
    }
    let e = space.winding_element();
    let value = dual.basis().iter().map(|phi| phi.dot(&f, &e)).find(|&v| v != 0).unwrap_or(0);
    Ok(rational_reconstruct(&f, value, default_reconstruction_bound(&f)).ok())
}

/// Number of newforms whose winding pairing vanishes.
///
/// The winding element is projected to the cuspidal part by `χ_E(T_{l0})`, where
/// `χ_E` is the characteristic polynomial of `T_{l0}` on the Eisenstein quotient.
/// Each newform whose pairing is nonzero adds exactly one dimension to the Hecke
/// span of the projection, so the count is `dim S - dim span`. The primes must
/// separate the eigensystems (primes up to the Sturm bound suffice).
pub fn vanishing_count(space: &ManinBasisSpace, primes: &[u64]) -> Result<usize, ModSymError> {
    check_primes(space, primes)?;
    let first = vanishing_count_at(space, primes)?;
    let second = vanishing_count_at(&space.companion()?, primes)?;
    if first != second {
        return Err(ModSymError::FieldDisagreement);
    }
    Ok(first)
}

fn vanishing_count_at(space: &ManinBasisSpace, primes: &[u64]) -> Result<usize, ModSymError> {
    let f = *space.field();
    let forms = space.cuspidal_dim() / 2;
    if forms == 0 {
        return Ok(0);
    }
    let ops = primes.iter().map(|&l| space.hecke_operator(l)).collect::<Result<Vec<_>, _>>()?;
    let t0 = &ops[0];
    let chi_m = charpoly(&f, &t0.to_dense());
    let chi_s = charpoly(&f, &restrict_operator(t0, space.cuspidal_subspace())?.to_dense());
    let (chi_e, rem) = chi_m.div_rem(&f, &chi_s);
    if !rem.is_zero() {
        return Err(ModSymError::FieldDisagreement);
    }
    let e = space.winding_element();
    let mut v = SparseVec::new();
    for &c in chi_e.coeffs().iter().rev() {
        v = t0.mul_vec(&v);
        v.add_scaled(&f, c, &e);
    }
    let n = space.quotient_dim();
    let mut span = Subspace::span(f, n, alloc::vec![v.clone()]);
    let mut queue = if v.is_zero() { Vec::new() } else { alloc::vec![v] };
    while let Some(w) = queue.pop() {
        for t in &ops {
            let image = t.mul_vec(&w);
            if !span.contains(&image) {
                span = span.sum(&Subspace::span(f, n, alloc::vec![image.clone()]));
                queue.push(image);
            }
        }
    }
    if !space.cuspidal_subspace().contains_subspace(&span) {
        return Err(ModSymError::FieldDisagreement);
    }
    Ok(forms.saturating_sub(span.dim()))
}

/// Sturm bound `⌊w·[SL₂(ℤ):Γ₀(N)]/12⌋`.
pub fn sturm_bound(level: u64, weight: usize) -> u64 {
    let index = prime_divisors(level).iter().fold(level as u128, |acc, &p| acc / p as u128 * (p as u128 + 1));
    (weight as u128 * index / 12) as u64
}

/// Primes up to the Sturm bound (at least up to 5) not dividing the level.
pub fn sturm_primes(level: u64, weight: usize) -> Vec<u64> {
    let hi = sturm_bound(level, weight).max(5);
    crate::arith::primes_in(2, hi).into_iter().filter(|l| !level.is_multiple_of(*l)).collect()
}
