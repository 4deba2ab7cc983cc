//! Dimension of weight-3 paramodular cusp forms S³(p) at prime level, and the
//! complement of the Gritsenko lifts given their dimension as data.

use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{is_prime, pow_mod};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamodularError {
    NotPrime { p: u64 },
    /// p must be odd for a Legendre symbol.
    EvenModulus,
    NonIntegralResult { p: u64, value: Rational },
    GritsenkoExceedsTotal { p: u64, gritsenko: u64, total: u64 },
}

impl fmt::Display for ParamodularError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamodularError::NotPrime { p } => write!(f, "{p} is not prime"),
            ParamodularError::EvenModulus => f.write_str("Kronecker symbol needs an odd prime"),
            ParamodularError::NonIntegralResult { p, value } => {
                write!(f, "dimension formula at p = {p} gave the non-integer {value}")
            }
            ParamodularError::GritsenkoExceedsTotal { p, gritsenko, total } => {
                write!(f, "Gritsenko dimension {gritsenko} exceeds dim S3({p}) = {total}")
            }
        }
    }
}

impl core::error::Error for ParamodularError {}

fn check_odd_prime(p: u64) -> Result<(), ParamodularError> {
    if !is_prime(p) {
        return Err(ParamodularError::NotPrime { p });
    }
    if p == 2 {
        return Err(ParamodularError::EvenModulus);
    }
    Ok(())
}

/// `(a/p)` by Euler's criterion.
pub fn kronecker(a: i64, p: u64) -> Result<i8, ParamodularError> {
    check_odd_prime(p)?;
    let r = (a as i128).rem_euclid(p as i128) as u64;
    Ok(match pow_mod(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// `(a/p)` by quadratic reciprocity (Jacobi symbol algorithm).
pub fn kronecker_reciprocity(a: i64, p: u64) -> Result<i8, ParamodularError> {
    check_odd_prime(p)?;
    let mut a = (a as i128).rem_euclid(p as i128) as u64;
    let mut n = p;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// 2/5 if p = 2, 3 mod 5; 1/5 if p = 5; else 0.
pub fn f_term(p: u64) -> Rational {
    match p % 5 {
        _ if p == 5 => Rational::new(1, 5),
        2 | 3 => Rational::new(2, 5),
        _ => Rational::zero(),
    }
}

/// 1/6 if p = 5 mod 12; else 0.
pub fn g_term(p: u64) -> Rational {
    if p % 12 == 5 {
        Rational::new(1, 6)
    } else {
        Rational::zero()
    }
}

/// dim S³(p) for prime p.
pub fn dim_s3(p: u64) -> Result<u64, ParamodularError> {
    if !is_prime(p) {
        return Err(ParamodularError::NotPrime { p });
    }
    if p < 5 {
        return Ok(0);
    }
    let k = |a: i64| -> Result<Rational, ParamodularError> { Ok(Rational::from_integer(kronecker(a, p)? as i128)) };
    let pr = Rational::from_integer(p as i128);
    let one = Rational::one();
    let (km1, km3, k2) = (k(-1)?, k(-3)?, k(2)?);
    let total = (pr * pr - one) / 2880
        + (pr + one) * (one - km1) / 64
        + Rational::from_integer(5) * (pr - one) * (one + km1) / 192
        + (pr + one) * (one - km3) / 72
        + (pr - one) * (one + km3) / 36
        + (one - k2) / 8
        + f_term(p)
        + g_term(p)
        - one;
    if !total.is_integer() || total < Rational::zero() {
        return Err(ParamodularError::NonIntegralResult { p, value: total });
    }
    Ok(total.to_integer() as u64)
}

/// Dimensions of S³(p), its Gritsenko part and the Hecke complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamodularDims {
    pub p: u64,
    pub dim_s3: u64,
    pub dim_gritsenko: Option<u64>,
    pub dim_non_gritsenko: Option<u64>,
}

pub fn complement_dims(p: u64, gritsenko: Option<u64>) -> Result<ParamodularDims, ParamodularError> {
    let total = dim_s3(p)?;
    let non = match gritsenko {
        Some(g) if g > total => return Err(ParamodularError::GritsenkoExceedsTotal { p, gritsenko: g, total }),
        Some(g) => Some(total - g),
        None => None,
    };
    Ok(ParamodularDims { p, dim_s3: total, dim_gritsenko: gritsenko, dim_non_gritsenko: non })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(1, 7), Ok(1));
        assert_eq!(kronecker(-1, 5), Ok(1));
        assert_eq!(kronecker(2, 5), Ok(-1));
        assert_eq!(kronecker(10, 5), Ok(0));
        assert_eq!(kronecker(3, 4), Err(ParamodularError::NotPrime { p: 4 }));
        assert_eq!(kronecker(3, 2), Err(ParamodularError::EvenModulus));
    }

    #[test]
    fn f_and_g() {
        assert_eq!(f_term(5), Rational::new(1, 5));
        assert_eq!(f_term(7), Rational::new(2, 5));
        assert_eq!(f_term(11), Rational::zero());
        assert_eq!(g_term(5), Rational::new(1, 6));
        assert_eq!(g_term(7), Rational::zero());
        assert_eq!(g_term(17), Rational::new(1, 6));
    }

    #[test]
    fn small_primes() {
        assert_eq!(dim_s3(2), Ok(0));
        assert_eq!(dim_s3(3), Ok(0));
        assert_eq!(dim_s3(5), Ok(0));
        assert_eq!(dim_s3(9), Err(ParamodularError::NotPrime { p: 9 }));
    }

    #[test]
    fn complements() {
        let d = complement_dims(5, Some(0)).unwrap();
        assert_eq!((d.dim_s3, d.dim_gritsenko, d.dim_non_gritsenko), (0, Some(0), Some(0)));
        let d = complement_dims(2, Some(0)).unwrap();
        assert_eq!(d.dim_non_gritsenko, Some(0));
        let total = dim_s3(61).unwrap();
        assert_eq!(complement_dims(61, Some(total)).unwrap().dim_non_gritsenko, Some(0));
        assert!(matches!(complement_dims(5, Some(1)), Err(ParamodularError::GritsenkoExceedsTotal { .. })));
        assert_eq!(complement_dims(13, None).unwrap().dim_non_gritsenko, None);
    }

    proptest! {
        #[test]
        fn kronecker_is_multiplicative_and_both_routes_agree(
            a in -100_000i64..100_000, b in -100_000i64..100_000,
            p in prop::sample::select(crate::arith::primes_in(3, 2000)),
        ) {
            let ka = kronecker(a, p).unwrap();
            prop_assert_eq!(ka, kronecker_reciprocity(a, p).unwrap());
            prop_assert_eq!(kronecker(a * b, p).unwrap(), ka * kronecker(b, p).unwrap());
        }
    }
}
