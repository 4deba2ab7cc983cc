//! Hecke polynomials and the lift families predicted for SL₄.
//!
//! A rank-n eigenclass with eigenvalues `a(l, k)` gives
//! `H(T) = Σ_k (-1)^k l^(k(k-1)/2) a(l, k) T^k`. The lift families are fixed
//! products of linear factors in T with a cuspidal quadratic or cubic cofactor.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

mod ratpoly;

pub use ratpoly::RatPoly;

use crate::Rational;

/// A Hecke polynomial at the prime `l` for a rank-`n` group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckePolynomial {
    pub prime_l: u64,
    pub n: usize,
    pub poly: RatPoly,
}

impl HeckePolynomial {
    pub fn coeffs(&self) -> &[Rational] {
        self.poly.coeffs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeckePolyError {
    /// `assemble` needs exactly n-1 eigenvalues.
    WrongEigenvalueCount { expected: usize, found: usize },
    RankTooSmall,
}

impl fmt::Display for HeckePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeckePolyError::WrongEigenvalueCount { expected, found } => {
                write!(f, "expected {expected} eigenvalues, found {found}")
            }
            HeckePolyError::RankTooSmall => f.write_str("rank must be at least 1"),
        }
    }
}

impl core::error::Error for HeckePolyError {}

fn lr(l: u64) -> Rational {
    Rational::from_integer(l as i128)
}

fn lpow(l: u64, e: u32) -> Rational {
    Rational::from_integer((l as i128).pow(e))
}

/// `Σ_k (-1)^k l^(k(k-1)/2) a(l,k) T^k` with `a(l,0) = 1` and `a(l,n) = central`.
pub fn assemble(n: usize, l: u64, a: &[Rational], central: Rational) -> Result<HeckePolynomial, HeckePolyError> {
    if n == 0 {
        return Err(HeckePolyError::RankTooSmall);
    }
    if a.len() != n - 1 {
        return Err(HeckePolyError::WrongEigenvalueCount { expected: n - 1, found: a.len() });
    }
    let coeffs = (0..=n)
        .map(|k| {
            let ak = match k {
                0 => Rational::one(),
                _ if k == n => central,
                _ => a[k - 1],
            };
            let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            sign * lpow(l, (k * (k.saturating_sub(1)) / 2) as u32) * ak
        })
        .collect();
    Ok(HeckePolynomial { prime_l: l, n, poly: RatPoly::new(coeffs) })
}

/// The five lift families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LiftKind {
    Weight2A,
    Weight2B,
    Weight4,
    Sl3A,
    Sl3B,
}

impl LiftKind {
    pub const ALL: [LiftKind; 5] = [LiftKind::Weight2A, LiftKind::Weight2B, LiftKind::Weight4, LiftKind::Sl3A, LiftKind::Sl3B];

    pub fn name(&self) -> &'static str {
        match self {
            LiftKind::Weight2A => "weight2-a",
            LiftKind::Weight2B => "weight2-b",
            LiftKind::Weight4 => "weight4",
            LiftKind::Sl3A => "sl3-a",
            LiftKind::Sl3B => "sl3-b",
        }
    }

    /// Eigenvalue inputs the family takes: one for the GL₂ kinds, two for SL₃.
    pub fn arity(&self) -> usize {
        match self {
            LiftKind::Sl3A | LiftKind::Sl3B => 2,
            _ => 1,
        }
    }
}

/// Linear factors and cuspidal cofactor of a lift polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftShape {
    pub linear: Vec<RatPoly>,
    pub cofactor: RatPoly,
}

impl LiftShape {
    pub fn expand(&self) -> RatPoly {
        RatPoly::product(self.linear.iter().chain(core::iter::once(&self.cofactor)))
    }
}

/// The factorization shape of `kind` at `l`. `params` holds α, β or (γ, γ′).
pub fn lift_shape(kind: LiftKind, l: u64, params: &[Rational]) -> LiftShape {
    assert_eq!(params.len(), kind.arity(), "wrong number of eigenvalues for {}", kind.name());
    let one = Rational::one();
    match kind {
        LiftKind::Weight2A => LiftShape {
            linear: alloc::vec![RatPoly::one_minus(lpow(l, 2)), RatPoly::one_minus(lpow(l, 3))],
            cofactor: RatPoly::new(alloc::vec![one, -params[0], lr(l)]),
        },
        LiftKind::Weight2B => LiftShape {
            linear: alloc::vec![RatPoly::one_minus(one), RatPoly::one_minus(lr(l))],
            cofactor: RatPoly::new(alloc::vec![one, -lpow(l, 2) * params[0], lpow(l, 5)]),
        },
        LiftKind::Weight4 => LiftShape {
            linear: alloc::vec![RatPoly::one_minus(lr(l)), RatPoly::one_minus(lpow(l, 2))],
            cofactor: RatPoly::new(alloc::vec![one, -params[0], lpow(l, 3)]),
        },
        LiftKind::Sl3A => LiftShape {
            linear: alloc::vec![RatPoly::one_minus(lpow(l, 3))],
            cofactor: RatPoly::new(alloc::vec![one, -params[0], lr(l) * params[1], -lpow(l, 3)]),
        },
        LiftKind::Sl3B => LiftShape {
            linear: alloc::vec![RatPoly::one_minus(one)],
            cofactor: RatPoly::new(alloc::vec![
                one,
                -lr(l) * params[0],
                lpow(l, 3) * params[1],
                -lpow(l, 6)
            ]),
        },
    }
}

/// Expanded lift polynomial of `kind`.
pub fn lift_polynomial(kind: LiftKind, l: u64, params: &[Rational]) -> HeckePolynomial {
    HeckePolynomial { prime_l: l, n: 4, poly: lift_shape(kind, l, params).expand() }
}

/// `(1 - l²T)(1 - l³T)(1 - αT + lT²)` and `(1 - T)(1 - lT)(1 - l²αT + l⁵T²)`.
pub fn weight2_lifts(l: u64, alpha: Rational) -> (HeckePolynomial, HeckePolynomial) {
    (lift_polynomial(LiftKind::Weight2A, l, &[alpha]), lift_polynomial(LiftKind::Weight2B, l, &[alpha]))
}

/// `(1 - lT)(1 - l²T)(1 - βT + l³T²)`.
pub fn weight4_lift(l: u64, beta: Rational) -> HeckePolynomial {
    lift_polynomial(LiftKind::Weight4, l, &[beta])
}

/// `(1 - l³T)(1 - γT + lγ′T² - l³T³)` and `(1 - T)(1 - lγT + l³γ′T² - l⁶T³)`.
pub fn sl3_lifts(l: u64, gamma: Rational, gamma_prime: Rational) -> (HeckePolynomial, HeckePolynomial) {
    (
        lift_polynomial(LiftKind::Sl3A, l, &[gamma, gamma_prime]),
        lift_polynomial(LiftKind::Sl3B, l, &[gamma, gamma_prime]),
    )
}

/// Divides `poly` by the linear factors of `kind` and compares the quotient with the cofactor.
pub fn matches_shape(kind: LiftKind, poly: &HeckePolynomial, params: &[Rational]) -> bool {
    let shape = lift_shape(kind, poly.prime_l, params);
    let mut rest = poly.poly.clone();
    for f in &shape.linear {
        match rest.exact_div(f) {
            Some(q) => rest = q,
            None => return false,
        }
    }
    rest == shape.cofactor
}

/// `l⁶T⁴ P(1/(l³T)) = P(T)`, i.e. `c_j l⁶ = c_(4-j) l^(3j)` for all j.
pub fn satisfies_weight4_symmetry(poly: &HeckePolynomial) -> bool {
    let l = poly.prime_l;
    poly.poly.degree() == Some(4)
        && (0..=4u32).all(|j| poly.poly.coeff(j as usize) * lpow(l, 6) == poly.poly.coeff(4 - j as usize) * lpow(l, 3 * j))
}

/// An SL₃ cuspidal eigenclass: `(γ, γ′)` are its T(l,1), T(l,2) eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl3Datum {
    pub level: u64,
    pub eigenvalues: BTreeMap<u64, (Rational, Rational)>,
}

/// A lift constituent and its polynomials at the requested primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftClass {
    pub kind: LiftKind,
    pub source: String,
    pub polynomial_family: BTreeMap<u64, HeckePolynomial>,
}
