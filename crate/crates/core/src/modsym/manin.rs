//! Splitting a symbol `{α, β}` into unimodular pieces by a continued fraction.
//!
//! The expansion runs in the frame of a matrix `g0 ∈ SL₂(ℤ)` with `g0(∞) = α`,
//! where the symbol becomes `{∞, x}`. The nearest-integer expansion of `x`
//! (partial quotients `floor(x + 1/2)`) keeps the piece count at most
//! `1 + log₂ n(ξ)`; convergents are mapped back through `g0`.

use alloc::vec::Vec;

use super::{Cusp, HomogeneousPoly, Mat2, ModularSymbol};
use crate::arith::{gcd, xgcd};

/// `n(ξ) = |a1 b2 - a2 b1|` for reduced endpoints `a1/b1`, `a2/b2`.
pub fn determinant(s: &ModularSymbol) -> u128 {
    cusp_determinant(&s.q1, &s.q2)
}

pub fn cusp_determinant(q1: &Cusp, q2: &Cusp) -> u128 {
    let (a1, b1) = q1.vector();
    let (a2, b2) = q2.vector();
    (a1 * b2 - a2 * b1).unsigned_abs()
}

/// A unimodular piece `{u(0), u(∞)}` of a symbol, with `u ∈ SL₂(ℤ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularPiece {
    pub start: Cusp,
    pub end: Cusp,
    pub frame: Mat2,
    /// `u⁻¹P`, so that the piece equals `u · ({0, ∞} ⊗ coeff)`.
    pub coeff: HomogeneousPoly,
}

/// Unimodular symbols summing to `s`. Each keeps the coefficient of `s`;
/// `α = β` gives the empty sum.
pub fn unimodularize(s: &ModularSymbol) -> Vec<ModularSymbol> {
    frames(s.q1.vector(), s.q2.vector())
        .into_iter()
        .map(|u| ModularSymbol::new(u.apply(&Cusp::integer(0)), u.apply(&Cusp::infinity()), s.coeff.clone()))
        .collect()
}

/// Like [`unimodularize`], also returning each connecting matrix and the transported coefficient.
pub fn unimodular_pieces(s: &ModularSymbol) -> Vec<UnimodularPiece> {
    frames(s.q1.vector(), s.q2.vector())
        .into_iter()
        .map(|u| UnimodularPiece {
            start: u.apply(&Cusp::integer(0)),
            end: u.apply(&Cusp::infinity()),
            frame: u,
            coeff: s.coeff.substitute(&u),
        })
        .collect()
}

/// Frames `u_i ∈ SL₂(ℤ)` with `u_1(0) = α`, `u_i(∞) = u_{i+1}(0)` and `u_last(∞) = β`.
/// Endpoints are nonzero integer vectors, not necessarily primitive.
pub(crate) fn frames(alpha: (i128, i128), beta: (i128, i128)) -> Vec<Mat2> {
    let (a1, b1) = primitive(alpha);
    let (a2, b2) = primitive(beta);
    let (_, x, y) = xgcd(a1, b1);
    // a1 x + b1 y = 1, so det (a1 -y; b1 x) = 1.
    let g0 = Mat2::new(a1, -y, b1, x);
    let (mut num, mut den) = g0.adjugate().apply_vector((a2, b2));
    let mut out = Vec::new();
    if den == 0 {
        return out;
    }
    if den < 0 {
        num = -num;
        den = -den;
    }
    let (mut prev, mut prev2) = ((1i128, 0i128), (0i128, 1i128));
    loop {
        let a = (2 * num + den).div_euclid(2 * den);
        let conv = (a * prev.0 + prev2.0, a * prev.1 + prev2.1);
        let sign = conv.0 * prev.1 - prev.0 * conv.1;
        let w = Mat2::new(conv.0, sign * prev.0, conv.1, sign * prev.1);
        out.push(normalize_frame(g0.mul(&w)));
        let rem = num - a * den;
        if rem == 0 {
            break;
        }
        (num, den) = if rem > 0 { (den, rem) } else { (-den, -rem) };
        (prev2, prev) = (prev, conv);
    }
    out
}

fn primitive((p, q): (i128, i128)) -> (i128, i128) {
    let g = gcd(p, q);
    assert!(g != 0, "cusp vector must be nonzero");
    (p / g, q / g)
}

/// `u` and `-u` give the same symbol; prefer a bottom row with positive leading entry.
fn normalize_frame(u: Mat2) -> Mat2 {
    if u.c < 0 || (u.c == 0 && u.d < 0) {
        Mat2::new(-u.a, -u.b, -u.c, -u.d)
    } else {
        u
    }
}
