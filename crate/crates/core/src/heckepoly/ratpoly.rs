use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::Rational;

/// Polynomial in T with exact rational coefficients, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i128]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn one() -> Self {
        RatPoly::from_integers(&[1])
    }

    /// `1 - c T`
    pub fn one_minus(c: Rational) -> Self {
        RatPoly::new(alloc::vec![Rational::one(), -c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).copied().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::new(Vec::new());
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a RatPoly>) -> RatPoly {
        factors.into_iter().fold(RatPoly::one(), |acc, f| acc.mul(f))
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> Option<(RatPoly, RatPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((RatPoly::new(Vec::new()), self.clone()));
        }
        let mut quot = alloc::vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] / lead;
            quot[k] = c;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        rem.truncate(dd);
        Some((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn eval(&self, t: Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// `T -> s T`
    pub fn scale_variable(&self, s: Rational) -> RatPoly {
        let mut p = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * p;
                p *= s;
                v
            })
            .collect();
        RatPoly::new(coeffs)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let abs = if neg { -c } else { *c };
            if i == 0 {
                write!(f, "{}{abs}", if neg { "-" } else { "" })?;
                continue;
            }
            f.write_str(if neg { " - " } else { " + " })?;
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match i {
                1 => f.write_str("T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn division_round_trips() {
        let a = RatPoly::from_integers(&[1, -10, 10, 40, 64]);
        let b = RatPoly::from_integers(&[1, -4]);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(a.exact_div(&RatPoly::from_integers(&[1, -3])).is_none());
        assert!(a.div_rem(&RatPoly::new(Vec::new())).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(RatPoly::from_integers(&[1, -1, 0, 2]).to_string(), "1 - T + 2T^3");
    }
}
