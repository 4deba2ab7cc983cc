use core::fmt;

use crate::arith::{is_prime, mul_mod, pow_mod};
use crate::Rational;

/// 2^61 - 1, the default working prime.
pub const DEFAULT_MODULUS: u64 = (1 << 61) - 1;
/// Largest prime below [`DEFAULT_MODULUS`]; used for the second-prime confirmation pass.
pub const SECONDARY_MODULUS: u64 = 2_305_843_009_213_693_921;

const MIN_MODULUS: u64 = 1 << 31;
const MAX_MODULUS: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    TooSmall(u64),
    TooLarge(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "field modulus {p} is not prime"),
            FieldError::TooSmall(p) => write!(f, "field modulus {p} must exceed 2^31"),
            FieldError::TooLarge(p) => write!(f, "field modulus {p} must be below 2^63"),
        }
    }
}

impl core::error::Error for FieldError {}

/// The prime field Z/pZ for a word-sized prime 2^31 < p < 2^63.
///
/// Elements are plain `u64` values in `0..p`; all arithmetic goes through
/// the field so that matrices and vectors stay free of per-element overhead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, FieldError> {
        if modulus <= MIN_MODULUS {
            return Err(FieldError::TooSmall(modulus));
        }
        if modulus >= MAX_MODULUS {
            return Err(FieldError::TooLarge(modulus));
        }
        if !is_prime(modulus) {
            return Err(FieldError::NotPrime(modulus));
        }
        Ok(PrimeField { modulus })
    }

    pub fn default_field() -> Self {
        PrimeField { modulus: DEFAULT_MODULUS }
    }

    pub fn secondary_field() -> Self {
        PrimeField { modulus: SECONDARY_MODULUS }
    }

    /// A second field distinct from `self`, for two-prime confirmation.
    pub fn companion(&self) -> Self {
        if self.modulus == DEFAULT_MODULUS {
            Self::secondary_field()
        } else {
            Self::default_field()
        }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.modulus)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.modulus);
        self.pow(a, self.modulus - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }

    pub fn from_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }

    /// Image of an exact rational; `None` when the denominator vanishes mod p.
    pub fn from_rational(&self, r: &Rational) -> Option<u64> {
        let den = self.from_i128(*r.denom());
        (den != 0).then(|| self.mul(self.from_i128(*r.numer()), self.inv(den)))
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn to_signed(&self, a: u64) -> i128 {
        if a > self.modulus / 2 {
            a as i128 - self.modulus as i128
        } else {
            a as i128
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_invariants() {
        assert!(PrimeField::new(DEFAULT_MODULUS).is_ok());
        assert!(PrimeField::new(SECONDARY_MODULUS).is_ok());
        assert_eq!(PrimeField::new(101), Err(FieldError::TooSmall(101)));
        assert_eq!(PrimeField::new(DEFAULT_MODULUS - 2), Err(FieldError::NotPrime(DEFAULT_MODULUS - 2)));
        assert_ne!(PrimeField::default_field().companion(), PrimeField::default_field());
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::default_field();
        let p = f.modulus();
        assert_eq!(f.add(p - 1, 5), 4);
        assert_eq!(f.sub(3, 5), p - 2);
        assert_eq!(f.mul(f.inv(3), 3), 1);
        assert_eq!(f.from_i64(-2), p - 2);
        assert_eq!(f.to_signed(p - 2), -2);
        assert_eq!(f.from_rational(&Rational::new(1, 3)), Some(f.inv(3)));
    }
}
