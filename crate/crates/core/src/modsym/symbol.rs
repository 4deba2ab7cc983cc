use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_traits::Zero;

use super::Cusp;
use crate::Rational;

/// Integer 2x2 matrix `(a b; c d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };
    pub const SIGMA: Mat2 = Mat2 { a: 0, b: -1, c: 1, d: 0 };
    pub const TAU: Mat2 = Mat2 { a: 0, b: -1, c: 1, d: -1 };

    pub const fn new(a: i128, b: i128, c: i128, d: i128) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> i128 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// `(d -b; -c a)`, the inverse scaled by the determinant.
    pub fn adjugate(&self) -> Mat2 {
        Mat2 { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn apply_vector(&self, (p, q): (i128, i128)) -> (i128, i128) {
        (self.a * p + self.b * q, self.c * p + self.d * q)
    }

    /// Möbius action on a cusp.
    pub fn apply(&self, z: &Cusp) -> Cusp {
        let (p, q) = self.apply_vector(z.vector());
        Cusp::from_i128(p, q).expect("nonsingular matrix maps cusps to cusps")
    }
}

/// Homogeneous polynomial of degree k-1 in X, Y; `coeffs[i]` multiplies `X^i Y^(k-1-i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    coeffs: Vec<Rational>,
}

impl HomogeneousPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "coefficient module needs k >= 1");
        HomogeneousPoly { coeffs }
    }

    pub fn monomial(k: usize, i: usize) -> Self {
        assert!(i < k, "monomial exponent out of range");
        let mut coeffs = alloc::vec![Rational::zero(); k];
        coeffs[i] = Rational::from_integer(1);
        HomogeneousPoly { coeffs }
    }

    /// The constant 1 in E_1.
    pub fn one() -> Self {
        HomogeneousPoly::monomial(1, 0)
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `P(aX + bY, cX + dY)`.
    pub fn substitute(&self, m: &Mat2) -> Self {
        HomogeneousPoly { coeffs: substitute(&self.coeffs, m) }
    }

    /// Left action `(gP)(X, Y) = P(dX - bY, -cX + aY)`.
    pub fn act(&self, g: &Mat2) -> Self {
        self.substitute(&g.adjugate())
    }

    pub fn eval(&self, x: Rational, y: Rational) -> Rational {
        let k = self.k();
        self.coeffs.iter().enumerate().fold(Rational::zero(), |acc, (i, c)| acc + c * pow(x, i) * pow(y, k - 1 - i))
    }
}

fn pow(x: Rational, e: usize) -> Rational {
    (0..e).fold(Rational::from_integer(1), |acc, _| acc * x)
}

/// `P(aX + bY, cX + dY)` over any ring containing the integers.
pub(crate) fn substitute<T>(coeffs: &[T], m: &Mat2) -> Vec<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T> + From<i128>,
{
    let k = coeffs.len();
    // Linear forms in X-degree: index 0 is the Y term, index 1 the X term.
    let first = [T::from(m.b), T::from(m.a)];
    let second = [T::from(m.d), T::from(m.c)];
    let mut out = alloc::vec![T::zero(); k];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = convolve(&power(&first, i), &power(&second, k - 1 - i));
        for (t, v) in term.into_iter().enumerate() {
            out[t] = out[t].clone() + c.clone() * v;
        }
    }
    out
}

fn power<T>(lin: &[T; 2], e: usize) -> Vec<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T> + From<i128>,
{
    (0..e).fold(alloc::vec![T::from(1)], |acc, _| convolve(&acc, lin))
}

fn convolve<T>(x: &[T], y: &[T]) -> Vec<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    let mut out = alloc::vec![T::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

/// A formal symbol `[q1, q2] ⊗ P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularSymbol {
    pub q1: Cusp,
    pub q2: Cusp,
    pub coeff: HomogeneousPoly,
}

impl ModularSymbol {
    pub fn new(q1: Cusp, q2: Cusp, coeff: HomogeneousPoly) -> Self {
        ModularSymbol { q1, q2, coeff }
    }

    /// Weight-2 symbol with trivial coefficient.
    pub fn plain(q1: Cusp, q2: Cusp) -> Self {
        ModularSymbol::new(q1, q2, HomogeneousPoly::one())
    }

    /// `g · ([q1, q2] ⊗ P) = [g q1, g q2] ⊗ gP`.
    pub fn act(&self, g: &Mat2) -> Self {
        ModularSymbol { q1: g.apply(&self.q1), q2: g.apply(&self.q2), coeff: self.coeff.act(g) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn substitution_expands_binomially() {
        // P = X^2 (k = 3) under (X, Y) -> (X + 2Y, 3X + Y): X^2 + 4XY + 4Y^2
        let p = HomogeneousPoly::monomial(3, 2);
        let q = p.substitute(&Mat2::new(1, 2, 3, 1));
        assert_eq!(q.coeffs(), &[r(4), r(4), r(1)]);
    }

    #[test]
    fn action_is_a_left_action() {
        let p = HomogeneousPoly::new(alloc::vec![r(1), r(-2), r(5)]);
        let g = Mat2::new(2, 1, 7, 4);
        let h = Mat2::new(1, -3, 0, 1);
        assert_eq!(p.act(&h).act(&g), p.act(&g.mul(&h)));
    }

    #[test]
    fn symbol_action_moves_cusps() {
        let s = ModularSymbol::plain(Cusp::integer(0), Cusp::infinity());
        let t = s.act(&Mat2::new(1, 1, 2, 3));
        assert_eq!((t.q1, t.q2), (Cusp::new(1, 3).unwrap(), Cusp::new(1, 2).unwrap()));
    }
}
