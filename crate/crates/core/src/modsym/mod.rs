//! Modular symbols for Γ₀(N) with coefficients in E_k, the space of
//! homogeneous polynomials of degree k-1. Weight is k + 1.
//!
//! Symbols are presented by Manin generators indexed by P¹(ℤ/N) and monomials.
//! Hecke operators act on cusps by the standard coset matrices and on
//! polynomials by `(gP)(X, Y) = P(dX - bY, -cX + aY)`; images are brought back
//! to generators by the continued-fraction algorithm in [`manin`].

use core::fmt;

mod cusp;
mod eigen;
pub mod manin;
mod p1;
mod space;
mod symbol;

use crate::exactlin::{ExactLinError, FieldError};

pub use cusp::Cusp;
pub use eigen::{
    eigen_report, eigensystems, sturm_bound, sturm_primes, vanishing_count, winding_pairing, EigenReport, EigenSystem,
};
pub use manin::{determinant, unimodular_pieces, unimodularize, UnimodularPiece};
pub use p1::{lift_to_sl2, P1List, ProjectivePoint};
pub use space::{build_space, ManinBasisSpace};
pub use symbol::{HomogeneousPoly, Mat2, ModularSymbol};

impl ManinBasisSpace {
    /// The same space over the companion field prime.
    pub fn companion(&self) -> Result<ManinBasisSpace, ModSymError> {
        ManinBasisSpace::new(self.level(), self.k(), self.field().companion())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModSymError {
    InvalidLevel,
    /// Only odd k (even weight) is supported.
    UnsupportedWeight { k: usize },
    DegenerateCusp,
    Overflow,
    BadPrime { l: u64, level: u64 },
    NotPrime { l: u64 },
    NotCoprime { n: u64, level: u64 },
    NoPrimes,
    NoCentralMonomial { k: usize },
    CoefficientMismatch { expected: usize, found: usize },
    DenominatorVanishes,
    SystemMismatch,
    NotAnEigensystem,
    /// The two field primes disagree; raise the reconstruction bound or change primes.
    FieldDisagreement,
    Linear(ExactLinError),
    Field(FieldError),
}

impl From<ExactLinError> for ModSymError {
    fn from(e: ExactLinError) -> Self {
        ModSymError::Linear(e)
    }
}

impl From<FieldError> for ModSymError {
    fn from(e: FieldError) -> Self {
        ModSymError::Field(e)
    }
}

impl fmt::Display for ModSymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModSymError::InvalidLevel => f.write_str("level must be at least 1"),
            ModSymError::UnsupportedWeight { k } => {
                write!(f, "unsupported weight {}: coefficient dimension k = {k} must be odd", k + 1)
            }
            ModSymError::DegenerateCusp => f.write_str("0/0 is not a cusp"),
            ModSymError::Overflow => f.write_str("integer overflow in cusp arithmetic"),
            ModSymError::BadPrime { l, level } => write!(f, "prime {l} divides the level {level}"),
            ModSymError::NotPrime { l } => write!(f, "{l} is not prime"),
            ModSymError::NotCoprime { n, level } => write!(f, "{n} is not a positive integer coprime to the level {level}"),
            ModSymError::NoPrimes => f.write_str("no Hecke primes given"),
            ModSymError::NoCentralMonomial { k } => write!(f, "k = {k} has no central monomial"),
            ModSymError::CoefficientMismatch { expected, found } => {
                write!(f, "coefficient has k = {found}, space has k = {expected}")
            }
            ModSymError::DenominatorVanishes => f.write_str("a rational denominator vanishes modulo the field prime"),
            ModSymError::SystemMismatch => f.write_str("eigensystem belongs to a different space"),
            ModSymError::NotAnEigensystem => f.write_str("no eigenvector has the given eigenvalues"),
            ModSymError::FieldDisagreement => f.write_str("results at the two field primes disagree"),
            ModSymError::Linear(e) => write!(f, "linear algebra: {e}"),
            ModSymError::Field(e) => write!(f, "field: {e}"),
        }
    }
}

impl core::error::Error for ModSymError {}
