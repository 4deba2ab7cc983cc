//! Modular symbols, Hecke eigensystems and lift predictions for the
//! cohomology of congruence subgroups, in exact arithmetic.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! front end and thread orchestration live in the companion `hecke` crate.
//!
//! * [`exactlin`]: sparse linear algebra over a word-sized prime field.
//! * [`modsym`]: Manin symbols for Γ₀(N), the continued-fraction
//!   unimodularization, Hecke operators and eigensystems.
//! * [`heckepoly`]: Hecke polynomials and the lift polynomial families.
//! * [`paramodular`]: the weight-3 paramodular dimension formula at prime level.
//! * [`ledger`]: the predicted decomposition of H⁵(Γ₀(N); ℂ) for SL₄ at prime level.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod exactlin;
pub mod heckepoly;
pub mod ledger;
pub mod modsym;
pub mod paramodular;

/// Exact rational numbers used throughout.
pub type Rational = num_rational::Ratio<i128>;
