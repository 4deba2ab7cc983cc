//! Exact linear algebra over a large word-sized prime field.
//!
//! Cohomology and Hecke computations never leave F_p: ranks, kernels and
//! simultaneous eigenspaces are computed modulo a prime near 2^61 and the
//! eigenvalues are lifted back to Q by rational reconstruction. Running the
//! same pipeline at a second prime guards against accidental collisions.

use core::fmt;

mod field;
mod matrix;
mod ops;
pub mod poly;
mod sparse;
mod subspace;

pub use field::{FieldError, PrimeField, DEFAULT_MODULUS, SECONDARY_MODULUS};
pub use matrix::{Echelon, FieldMatrix, PivotRule, RowOp};
pub use ops::{
    default_reconstruction_bound, rank, rank_and_kernel, rational_reconstruct, restrict_operator, split_eigenspaces,
    EigenDecomposition, Eigenspace, JordanDefect,
};
pub use sparse::SparseVec;
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactLinError {
    NotInvariant { basis_index: usize },
    NonCommuting { first: usize, second: usize },
    NoReconstruction { value: u64, bound: u64 },
    BoundTooLarge { bound: u64, modulus: u64 },
    DimensionMismatch { expected: usize, found: usize },
    IndexOutOfBounds { row: usize, col: usize, nrows: usize, ncols: usize },
    EmptyOperatorList,
    FieldMismatch,
}

impl fmt::Display for ExactLinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactLinError::NotInvariant { basis_index } => {
                write!(f, "operator does not preserve the subspace (basis vector {basis_index} escapes)")
            }
            ExactLinError::NonCommuting { first, second } => {
                write!(f, "operators {first} and {second} do not commute")
            }
            ExactLinError::NoReconstruction { value, bound } => {
                write!(f, "no rational with height <= {bound} reduces to {value}")
            }
            ExactLinError::BoundTooLarge { bound, modulus } => {
                write!(f, "reconstruction bound {bound} too large for modulus {modulus} (need 2B^2 < p)")
            }
            ExactLinError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            ExactLinError::IndexOutOfBounds { row, col, nrows, ncols } => {
                write!(f, "entry ({row}, {col}) outside a {nrows}x{ncols} matrix")
            }
            ExactLinError::EmptyOperatorList => f.write_str("no operators supplied"),
            ExactLinError::FieldMismatch => f.write_str("operators live over different prime fields"),
        }
    }
}

impl core::error::Error for ExactLinError {}
