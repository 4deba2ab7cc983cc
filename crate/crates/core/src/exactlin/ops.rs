use alloc::vec::Vec;

use super::poly::charpoly;
use super::{ExactLinError, FieldMatrix, PivotRule, PrimeField, SparseVec, Subspace};
use crate::arith::{gcd, isqrt};
use crate::Rational;

/// Rank of `m` and a basis of its right kernel `{v : m v = 0}`.
pub fn rank_and_kernel(m: &FieldMatrix) -> (usize, Subspace) {
    let field = *m.field();
    let mut work = m.clone();
    let echelon = work.reduce(PivotRule::Markowitz);
    let n = m.ncols();
    let mut is_pivot = alloc::vec![false; n];
    for &c in &echelon.pivot_cols {
        is_pivot[c] = true;
    }
    let kernel = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut pairs = alloc::vec![(free, 1u64)];
            for (row, &pc) in echelon.pivot_cols.iter().enumerate() {
                let v = work.get(row, free);
                if v != 0 {
                    pairs.push((pc, field.neg(v)));
                }
            }
            SparseVec::from_pairs(&field, pairs)
        })
        .collect();
    (echelon.rank(), Subspace::span(field, n, kernel))
}

pub fn rank(m: &FieldMatrix) -> usize {
    m.clone().reduce(PivotRule::Markowitz).rank()
}

/// Matrix of `op` on the invariant subspace `s`, in the canonical basis of `s`.
pub fn restrict_operator(op: &FieldMatrix, s: &Subspace) -> Result<FieldMatrix, ExactLinError> {
    if !op.is_square() || op.ncols() != s.ambient_dim() {
        return Err(ExactLinError::DimensionMismatch { expected: s.ambient_dim(), found: op.ncols() });
    }
    let d = s.dim();
    let mut triples = Vec::new();
    for (j, b) in s.basis().iter().enumerate() {
        let image = op.mul_vec(b);
        let coords = s.coordinates(&image).ok_or(ExactLinError::NotInvariant { basis_index: j })?;
        triples.extend(coords.into_iter().enumerate().filter(|&(_, c)| c != 0).map(|(i, c)| (i, j, c)));
    }
    FieldMatrix::from_triples(*op.field(), d, d, triples)
}

/// A simultaneous eigenspace with its eigenvalue tuple (one entry per operator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenspace {
    pub eigenvalues: Vec<u64>,
    pub space: Subspace,
}

/// A place where an operator is not semisimple on the current common eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanDefect {
    /// Eigenvalues of operators `0..=operator` leading to this space.
    pub eigenvalues: Vec<u64>,
    pub operator: usize,
    pub algebraic: usize,
    pub geometric: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenDecomposition {
    pub spaces: Vec<Eigenspace>,
    /// Generalized eigenvectors are kept out of `spaces` and listed here.
    pub defects: Vec<JordanDefect>,
    /// Dimension belonging to eigenvalues outside F_p.
    pub unsplit_dim: usize,
}

/// Splits the common space of pairwise commuting operators into simultaneous eigenspaces.
///
/// Only eigenvalues lying in F_p are found. Spaces are ordered by their
/// eigenvalue tuples (as field elements).
pub fn split_eigenspaces(ops: &[FieldMatrix]) -> Result<EigenDecomposition, ExactLinError> {
    let first = ops.first().ok_or(ExactLinError::EmptyOperatorList)?;
    let n = first.nrows();
    for op in ops {
        if !op.is_square() || op.nrows() != n {
            return Err(ExactLinError::DimensionMismatch { expected: n, found: op.nrows() });
        }
        if op.field() != first.field() {
            return Err(ExactLinError::FieldMismatch);
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if !ops[i].commutes_with(&ops[j])? {
                return Err(ExactLinError::NonCommuting { first: i, second: j });
            }
        }
    }
    let mut out = EigenDecomposition { spaces: Vec::new(), defects: Vec::new(), unsplit_dim: 0 };
    refine(ops, 0, Subspace::full(*first.field(), n), Vec::new(), &mut out)?;
    Ok(out)
}

fn refine(
    ops: &[FieldMatrix],
    idx: usize,
    space: Subspace,
    prefix: Vec<u64>,
    out: &mut EigenDecomposition,
) -> Result<(), ExactLinError> {
    if space.dim() == 0 {
        return Ok(());
    }
    if idx == ops.len() {
        out.spaces.push(Eigenspace { eigenvalues: prefix, space });
        return Ok(());
    }
    let field = *space.field();
    let local = restrict_operator(&ops[idx], &space)?;
    let roots = charpoly(&field, &local.to_dense()).roots(&field);
    let found: usize = roots.iter().map(|&(_, m)| m).sum();
    out.unsplit_dim += space.dim() - found;
    for (lambda, mult) in roots {
        let (_, kernel) = rank_and_kernel(&local.shifted(lambda));
        let mut tuple = prefix.clone();
        tuple.push(lambda);
        if kernel.dim() < mult {
            out.defects.push(JordanDefect {
                eigenvalues: tuple.clone(),
                operator: idx,
                algebraic: mult,
                geometric: kernel.dim(),
            });
        }
        let ambient_vectors = kernel.basis().iter().map(|c| space.combine(&c.to_dense(space.dim()))).collect();
        let sub = Subspace::span(field, space.ambient_dim(), ambient_vectors);
        refine(ops, idx + 1, sub, tuple, out)?;
    }
    Ok(())
}

/// Largest bound `B` with `2 B^2 < p`.
pub fn default_reconstruction_bound(field: &PrimeField) -> u64 {
    let b = isqrt((field.modulus() as u128 - 1) / 2) as u64;
    if 2 * (b as u128) * (b as u128) < field.modulus() as u128 {
        b
    } else {
        b - 1
    }
}

/// The unique `a/b` with `|a|, |b| <= bound` and `a = x b (mod p)`, if it exists.
pub fn rational_reconstruct(field: &PrimeField, x: u64, bound: u64) -> Result<Rational, ExactLinError> {
    let p = field.modulus();
    if 2 * (bound as u128) * (bound as u128) >= p as u128 {
        return Err(ExactLinError::BoundTooLarge { bound, modulus: p });
    }
    let x = x % p;
    let (mut r0, mut r1) = (p as i128, x as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound as i128 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.unsigned_abs() > bound as u128 || gcd(r1, t1) != 1 {
        return Err(ExactLinError::NoReconstruction { value: x, bound });
    }
    Ok(Rational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    #[test]
    fn identity_rank_and_kernel() {
        let (r, k) = rank_and_kernel(&FieldMatrix::identity(f(), 2));
        assert_eq!((r, k.dim()), (2, 0));
    }

    #[test]
    fn one_by_two_kernel() {
        let f = f();
        let (r, k) = rank_and_kernel(&FieldMatrix::from_i64_rows(f, &[&[1, 1]]));
        assert_eq!(r, 1);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0].to_dense(2), [1, f.modulus() - 1]);
    }

    #[test]
    fn empty_matrix_kernel_is_everything() {
        let (r, k) = rank_and_kernel(&FieldMatrix::zeros(f(), 0, 3));
        assert_eq!((r, k.dim()), (0, 3));
    }

    #[test]
    fn restrict_examples() {
        let f = f();
        let s = Subspace::span(f, 3, alloc::vec![SparseVec::unit(1), SparseVec::unit(2)]);
        let id = restrict_operator(&FieldMatrix::identity(f, 3), &s).unwrap();
        assert_eq!(id, FieldMatrix::identity(f, 2));
        let d = restrict_operator(&FieldMatrix::diagonal(f, &[2, 3, 3]), &s).unwrap();
        assert_eq!(d, FieldMatrix::diagonal(f, &[3, 3]));
        let shear = FieldMatrix::from_i64_rows(f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(restrict_operator(&shear, &s), Err(ExactLinError::NotInvariant { basis_index: 0 }));
    }

    #[test]
    fn split_examples() {
        let f = f();
        let one = split_eigenspaces(&[FieldMatrix::identity(f, 3)]).unwrap();
        assert_eq!(one.spaces.len(), 1);
        assert_eq!((one.spaces[0].eigenvalues.as_slice(), one.spaces[0].space.dim()), (&[1u64][..], 3));
        let two = split_eigenspaces(&[FieldMatrix::diagonal(f, &[1, 2])]).unwrap();
        let got: Vec<_> = two.spaces.iter().map(|e| (e.eigenvalues[0], e.space.dim())).collect();
        assert_eq!(got, [(1, 1), (2, 1)]);
    }

    #[test]
    fn split_reports_jordan_block_and_rejects_noncommuting() {
        let f = f();
        let jordan = FieldMatrix::from_i64_rows(f, &[&[5, 1], &[0, 5]]);
        let d = split_eigenspaces(core::slice::from_ref(&jordan)).unwrap();
        assert_eq!(d.defects, [JordanDefect { eigenvalues: alloc::vec![5], operator: 0, algebraic: 2, geometric: 1 }]);
        assert_eq!(d.spaces[0].space.dim(), 1);
        let other = FieldMatrix::from_i64_rows(f, &[&[1, 0], &[1, 1]]);
        assert_eq!(split_eigenspaces(&[jordan, other]), Err(ExactLinError::NonCommuting { first: 0, second: 1 }));
    }

    #[test]
    fn split_counts_irreducible_part_as_unsplit() {
        let f = f();
        // rotation by 90 degrees: x^2 + 1, no roots mod 2^61 - 1
        let rot = FieldMatrix::from_i64_rows(f, &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 7]]);
        let d = split_eigenspaces(&[rot]).unwrap();
        assert_eq!(d.unsplit_dim, 2);
        assert_eq!(d.spaces.len(), 1);
    }

    #[test]
    fn reconstruction_examples() {
        let f = f();
        let p = f.modulus();
        assert_eq!(rational_reconstruct(&f, 5, 10), Ok(Rational::from_integer(5)));
        assert_eq!(rational_reconstruct(&f, p - 2, 10), Ok(Rational::from_integer(-2)));
        let third = f.inv(3);
        assert_eq!(f.mul(third, 3), 1);
        assert_eq!(rational_reconstruct(&f, third, 10), Ok(Rational::new(1, 3)));
        assert!(matches!(rational_reconstruct(&f, 1 << 40, 10), Err(ExactLinError::NoReconstruction { .. })));
        assert!(matches!(rational_reconstruct(&f, 1, 1 << 31), Err(ExactLinError::BoundTooLarge { .. })));
        let b = default_reconstruction_bound(&f);
        assert!(2 * (b as u128).pow(2) < p as u128 && 2 * (b as u128 + 1).pow(2) >= p as u128);
    }
}
