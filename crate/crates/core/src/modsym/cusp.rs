use core::fmt;

use super::ModSymError;
use crate::arith::{gcd, mod_inverse};

/// A cusp `numerator/denominator` in lowest terms with `denominator >= 0`.
/// Infinity is `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cusp {
    numerator: i64,
    denominator: i64,
}

impl Cusp {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, ModSymError> {
        Self::from_i128(numerator as i128, denominator as i128)
    }

    /// Normalizes a vector `(p, q)`; fails for `(0, 0)` or when the reduced pair overflows i64.
    pub fn from_i128(p: i128, q: i128) -> Result<Self, ModSymError> {
        if p == 0 && q == 0 {
            return Err(ModSymError::DegenerateCusp);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        let numerator = i64::try_from(p).map_err(|_| ModSymError::Overflow)?;
        let denominator = i64::try_from(q).map_err(|_| ModSymError::Overflow)?;
        Ok(Cusp { numerator, denominator })
    }

    pub const fn infinity() -> Self {
        Cusp { numerator: 1, denominator: 0 }
    }

    pub const fn integer(n: i64) -> Self {
        Cusp { numerator: n, denominator: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_infinity(&self) -> bool {
        self.denominator == 0
    }

    pub(crate) fn vector(&self) -> (i128, i128) {
        (self.numerator as i128, self.denominator as i128)
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("oo")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Γ₀(N)-equivalence of cusps given as reduced vectors `(a, c)` with `c >= 0`.
///
/// a1/c1 ~ a2/c2 iff s1 c2 = s2 c1 mod gcd(c1 c2, N), where s a = 1 mod c.
pub(crate) fn gamma0_equivalent(level: u64, x: (i128, i128), y: (i128, i128)) -> bool {
    let n = level as i128;
    let s = |(a, c): (i128, i128)| -> i128 {
        if c == 0 {
            1
        } else {
            mod_inverse(a, c).unwrap_or(0)
        }
    };
    let m = gcd(x.1 * y.1, n);
    if m == 1 {
        return true;
    }
    (s(x) * y.1 - s(y) * x.1).rem_euclid(m) == 0
}
