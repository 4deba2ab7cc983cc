use alloc::vec::Vec;

use super::{FieldMatrix, PivotRule, PrimeField, SparseVec};

/// A subspace of F_p^n held in canonical reduced echelon form.
///
/// Basis vector `i` has a 1 at `pivots[i]`, every other basis vector is zero
/// there, and pivots increase. Two subspaces are equal iff their bases are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient_dim: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary vectors; dependent vectors are dropped.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: Vec<SparseVec>) -> Self {
        let mut m = FieldMatrix::from_rows(field, ambient_dim, vectors);
        let echelon = m.reduce(PivotRule::Leftmost);
        let basis = m.rows()[..echelon.rank()].to_vec();
        Subspace { field, ambient_dim, basis, pivots: echelon.pivot_cols }
    }

    pub fn full(field: PrimeField, n: usize) -> Self {
        Subspace { field, ambient_dim: n, basis: (0..n).map(SparseVec::unit).collect(), pivots: (0..n).collect() }
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Subspace { field, ambient_dim: n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` lies outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<u64>> {
        let f = &self.field;
        let coords: Vec<u64> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut residual = v.clone();
        for (b, &c) in self.basis.iter().zip(&coords) {
            residual.add_scaled(f, f.neg(c), b);
        }
        residual.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// The vector with the given coordinates in this basis.
    pub fn combine(&self, coords: &[u64]) -> SparseVec {
        let mut out = SparseVec::new();
        for (b, &c) in self.basis.iter().zip(coords) {
            out.add_scaled(&self.field, c, b);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.field, self.ambient_dim, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_is_canonical() {
        let f = PrimeField::default_field();
        let a = SparseVec::from_pairs(&f, alloc::vec![(0, 2), (2, 4)]);
        let b = SparseVec::from_pairs(&f, alloc::vec![(0, 1), (1, 1), (2, 2)]);
        let s1 = Subspace::span(f, 3, alloc::vec![a.clone(), b.clone()]);
        let mut c = b.clone();
        c.add_scaled(&f, 3, &a);
        let s2 = Subspace::span(f, 3, alloc::vec![c, a.clone(), b]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert_eq!(s1.pivots(), &[0, 1]);
        assert!(s1.contains(&a));
        assert!(!s1.contains(&SparseVec::unit(2)));
        let coords = s1.coordinates(&a).unwrap();
        assert_eq!(s1.combine(&coords), a);
    }
}
