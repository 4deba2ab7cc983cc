//! Hecke eigenvalues against point counts on elliptic curves, plus operator identities.

use std::collections::BTreeMap;

use hecke_core::arith::primes_in;
use hecke_core::exactlin::{rank_and_kernel, restrict_operator, FieldMatrix, PrimeField};
use hecke_core::modsym::{
    build_space, eigen_report, eigensystems, sturm_primes, vanishing_count, winding_pairing, ManinBasisSpace,
};
use hecke_core::Rational;

/// `[a1, a2, a3, a4, a6]`
type Weierstrass = [i64; 5];

const E11A: Weierstrass = [0, -1, 1, -10, -20];
const E37A: Weierstrass = [0, 0, 1, -1, 0];
const E37B: Weierstrass = [0, 1, 1, -23, -50];
const E43A: Weierstrass = [0, 1, 1, 0, 0];

/// `a_p = p + 1 - #E(F_p)` by brute-force counting of affine points.
fn trace_of_frobenius(e: &Weierstrass, p: i64) -> i64 {
    let [a1, a2, a3, a4, a6] = e.map(|c| c.rem_euclid(p));
    let mut affine = 0;
    for x in 0..p {
        let rhs = (((x + a2) * x % p + a4) * x + a6) % p;
        for y in 0..p {
            if (y * y + a1 * x * y + a3 * y - rhs).rem_euclid(p) == 0 {
                affine += 1;
            }
        }
    }
    p - affine
}

fn good_primes(level: u64, hi: u64) -> Vec<u64> {
    primes_in(2, hi).into_iter().filter(|l| !level.is_multiple_of(*l)).collect()
}

fn curve_eigenvalues(e: &Weierstrass, primes: &[u64]) -> BTreeMap<u64, Rational> {
    primes.iter().map(|&l| (l, Rational::from_integer(trace_of_frobenius(e, l as i64) as i128))).collect()
}

#[test]
fn point_counts() {
    let traces: Vec<i64> = [2, 3, 5, 7, 13].iter().map(|&p| trace_of_frobenius(&E11A, p)).collect();
    assert_eq!(traces, [-2, -1, 1, -2, 4]);
}

#[test]
fn level_eleven_matches_point_counts_to_fifty() {
    let primes = good_primes(11, 50);
    let s = build_space(11, 1).unwrap();
    let systems = eigensystems(&s, &primes).unwrap();
    assert_eq!(systems.len(), 1);
    assert_eq!(systems[0].dim, 2);
    assert_eq!(systems[0].eigenvalues, curve_eigenvalues(&E11A, &primes));

    // the same run at the companion prime alone reconstructs the same values
    let other = ManinBasisSpace::new(11, 1, PrimeField::secondary_field()).unwrap();
    assert_eq!(eigensystems(&other, &primes).unwrap(), systems);
}

#[test]
fn level_thirty_seven_has_two_curves() {
    let primes = good_primes(37, 30);
    let systems = eigensystems(&build_space(37, 1).unwrap(), &primes).unwrap();
    let found: Vec<_> = systems.iter().map(|s| s.eigenvalues.clone()).collect();
    assert_eq!(found, [curve_eigenvalues(&E37A, &primes), curve_eigenvalues(&E37B, &primes)]);
}

#[test]
fn level_forty_three_splits_one_rational_form() {
    let primes = good_primes(43, 20);
    let report = eigen_report(&build_space(43, 1).unwrap(), &primes).unwrap();
    assert_eq!(report.systems.len(), 1);
    assert_eq!(report.systems[0].eigenvalues, curve_eigenvalues(&E43A, &primes));
    // the conjugate pair with a_2 = ±√2, twice: (x² - 2)²
    assert_eq!(report.nonrational_dim, 4);
    assert_eq!(report.nonrational_charpolys[&2], [4, 0, -4, 0, 1]);
}

#[test]
fn weight_two_integrality_at_prime_levels() {
    for n in primes_in(2, 50) {
        let s = build_space(n, 1).unwrap();
        for sys in eigensystems(&s, &sturm_primes(n, 2)).unwrap() {
            assert!(sys.eigenvalues.values().all(|a| a.is_integer()), "N = {n}");
            assert!(sys.satisfies_ramanujan(), "N = {n}");
        }
    }
}

#[test]
fn hecke_operators_commute() {
    for n in [11u64, 37, 43] {
        for k in [1usize, 3] {
            let s = build_space(n, k).unwrap();
            let ops: Vec<_> = [2, 3, 5].iter().map(|&l| s.hecke_operator(l).unwrap()).collect();
            for (i, a) in ops.iter().enumerate() {
                for b in &ops[i + 1..] {
                    assert!(a.commutes_with(b).unwrap(), "N = {n}, k = {k}");
                }
                restrict_operator(a, s.cuspidal_subspace()).expect("cusp forms are Hecke stable");
            }
            let t6 = s.hecke_operator_n(6).unwrap();
            assert_eq!(t6, ops[0].mul(&ops[1]).unwrap(), "N = {n}, k = {k}");
        }
    }
}

#[test]
fn weight_four_level_eleven() {
    let s = build_space(11, 3).unwrap();
    let primes = sturm_primes(11, 4);
    let report = eigen_report(&s, &primes).unwrap();
    // S4(11) is a single Galois orbit of two forms
    assert!(report.systems.is_empty());
    assert_eq!(report.nonrational_dim, 4);
    let chi = &report.nonrational_charpolys[&2];
    assert_eq!(chi.len(), 5);
    // both forms have nonzero central value
    assert_eq!(vanishing_count(&s, &primes).unwrap(), 0);
}

#[test]
fn weight_four_level_thirteen() {
    let s = build_space(13, 3).unwrap();
    let primes = sturm_primes(13, 4);
    let report = eigen_report(&s, &primes).unwrap();
    assert_eq!(report.systems.len(), 1);
    let sys = &report.systems[0];
    let a2 = sys.eigenvalues[&2];
    assert_eq!(a2, Rational::from_integer(-5));
    assert!(sys.satisfies_ramanujan());
    // a_4 = a_2² - 2³ read off T_4 on the eigenspace
    let t4 = restrict_operator(&s.hecke_operator_n(4).unwrap(), s.cuspidal_subspace()).unwrap();
    let f = *s.field();
    let t2 = restrict_operator(&s.hecke_operator(2).unwrap(), s.cuspidal_subspace()).unwrap();
    let a4 = f.from_i128(a2.to_integer() * a2.to_integer() - 8);
    let kernel = |m: &FieldMatrix, v| rank_and_kernel(&m.shifted(v)).1;
    let e2 = kernel(&t2, f.from_i128(-5));
    assert_eq!(e2.dim(), 2);
    assert!(kernel(&t4, a4).contains_subspace(&e2));
    assert_eq!(winding_pairing(&s, sys).unwrap(), Rational::from_integer(0));
    assert_eq!(vanishing_count(&s, &primes).unwrap(), 1);
}
