//! Polynomial JSON `{ "l": prime, "coeffs": ["1", "-10", ...] }`.

use hecke_core::heckepoly::{HeckePolynomial, LiftKind, RatPoly};
use serde::{Deserialize, Serialize};

use super::{parse_rationals, rationals_to_strings, FormatError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub l: u64,
    pub coeffs: Vec<String>,
}

impl PolyJson {
    pub fn of(p: &HeckePolynomial) -> Self {
        PolyJson { l: p.prime_l, coeffs: rationals_to_strings(p.coeffs()) }
    }

    /// `n` is not on the wire; it is the degree for lift polynomials.
    pub fn to_polynomial(&self, n: usize) -> Result<HeckePolynomial, FormatError> {
        Ok(HeckePolynomial { prime_l: self.l, n, poly: RatPoly::new(parse_rationals(&self.coeffs)?) })
    }
}

pub fn lift_kind_from_name(name: &str) -> Result<LiftKind, FormatError> {
    LiftKind::ALL
        .into_iter()
        .find(|k| k.name() == name)
        .ok_or_else(|| FormatError::LiftKind(name.to_string()))
}
