use alloc::vec::Vec;

use super::{ExactLinError, PrimeField, SparseVec};

/// An elementary row operation, as recorded in a basis log.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    Scale { row: usize, factor: u64 },
    /// `rows[target] += factor * rows[source]`
    AddMultiple { target: usize, source: usize, factor: u64 },
}

/// How elimination picks its next pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    /// Least Markowitz cost `(r - 1)(c - 1)`, ties to the lowest `(row, col)`.
    Markowitz,
    /// Leftmost nonzero column, lowest row: yields the canonical reduced echelon form.
    Leftmost,
}

/// Result of a full Gauss–Jordan reduction: rows `0..rank` carry the pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub pivot_cols: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

/// Sparse matrix over a word-sized prime field, stored by rows.
///
/// When a basis log is enabled every row operation applied through
/// [`FieldMatrix::apply`] is recorded, so the accumulated change of basis can
/// be replayed against the original matrix.
#[derive(Debug, Clone)]
pub struct FieldMatrix {
    field: PrimeField,
    ncols: usize,
    rows: Vec<SparseVec>,
    basis_log: Option<Vec<RowOp>>,
}

impl PartialEq for FieldMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ncols == other.ncols && self.rows == other.rows
    }
}

impl Eq for FieldMatrix {}

/// Switch to dense elimination once the active block is more than 20% full.
const DENSE_FILL_PERCENT: usize = 20;

impl FieldMatrix {
    pub fn zeros(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        FieldMatrix { field, ncols, rows: alloc::vec![SparseVec::new(); nrows], basis_log: None }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::from_rows(field, n, (0..n).map(SparseVec::unit).collect())
    }

    pub fn diagonal(field: PrimeField, diag: &[u64]) -> Self {
        let rows = diag
            .iter()
            .enumerate()
            .map(|(i, &d)| SparseVec::from_pairs(&field, alloc::vec![(i, d % field.modulus())]))
            .collect();
        Self::from_rows(field, diag.len(), rows)
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < ncols)));
        FieldMatrix { field, ncols, rows, basis_log: None }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples(
        field: PrimeField,
        nrows: usize,
        ncols: usize,
        triples: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self, ExactLinError> {
        let mut buckets: Vec<Vec<(usize, u64)>> = alloc::vec![Vec::new(); nrows];
        for (i, j, v) in triples {
            if i >= nrows || j >= ncols {
                return Err(ExactLinError::IndexOutOfBounds { row: i, col: j, nrows, ncols });
            }
            buckets[i].push((j, v % field.modulus()));
        }
        let rows = buckets.into_iter().map(|b| SparseVec::from_pairs(&field, b)).collect();
        Ok(Self::from_rows(field, ncols, rows))
    }

    pub fn from_dense(field: PrimeField, ncols: usize, dense: &[Vec<u64>]) -> Self {
        Self::from_rows(field, ncols, dense.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    /// Convenience for small signed integer matrices.
    pub fn from_i64_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_dense(field, ncols, &dense)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    /// Row-major `(row, col, value)` over the stored (nonzero) entries.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols)).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut cols: Vec<Vec<(usize, u64)>> = alloc::vec![Vec::new(); self.ncols];
        for (i, j, v) in self.triples() {
            cols[j].push((i, v));
        }
        let rows = cols.into_iter().map(|entries| SparseVec::from_pairs(&self.field, entries)).collect();
        Self::from_rows(self.field, self.nrows(), rows)
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let pairs = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.dot(&self.field, v)))
            .filter(|&(_, x)| x != 0)
            .collect();
        SparseVec::from_pairs(&self.field, pairs)
    }

    pub fn mul_dense_vec(&self, v: &[u64]) -> Vec<u64> {
        self.rows.iter().map(|r| r.dot_dense(&self.field, v)).collect()
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, ExactLinError> {
        if self.ncols != other.nrows() {
            return Err(ExactLinError::DimensionMismatch { expected: self.ncols, found: other.nrows() });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, v) in r.iter() {
                    acc.add_scaled(&self.field, v, &other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Self::from_rows(self.field, other.ncols, rows))
    }

    /// `self - lambda * I` for a square matrix.
    pub fn shifted(&self, lambda: u64) -> FieldMatrix {
        let mut out = self.clone();
        out.basis_log = None;
        let neg = self.field.neg(lambda);
        for (i, row) in out.rows.iter_mut().enumerate() {
            row.add_scaled(&self.field, neg, &SparseVec::unit(i));
        }
        out
    }

    pub fn commutes_with(&self, other: &FieldMatrix) -> Result<bool, ExactLinError> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Starts recording row operations (clearing any previous log).
    pub fn with_basis_log(mut self) -> Self {
        self.basis_log = Some(Vec::new());
        self
    }

    pub fn basis_log(&self) -> Option<&[RowOp]> {
        self.basis_log.as_deref()
    }

    /// Applies one row operation, logging it when a basis log is active.
    pub fn apply(&mut self, op: RowOp) {
        self.apply_unlogged(op);
        if let Some(log) = &mut self.basis_log {
            log.push(op);
        }
    }

    fn apply_unlogged(&mut self, op: RowOp) {
        match op {
            RowOp::Swap(a, b) => self.rows.swap(a, b),
            RowOp::Scale { row, factor } => self.rows[row].scale(&self.field, factor),
            RowOp::AddMultiple { target, source, factor } => {
                let src = self.rows[source].clone();
                self.rows[target].add_scaled(&self.field, factor, &src);
            }
        }
    }

    /// Replays a recorded log against `original`, reproducing the transformed matrix.
    pub fn replay(original: &FieldMatrix, log: &[RowOp]) -> FieldMatrix {
        let mut m = original.clone();
        m.basis_log = None;
        for &op in log {
            m.apply_unlogged(op);
        }
        m
    }

    /// Full Gauss–Jordan reduction in place.
    ///
    /// Afterwards rows `0..rank` have a 1 in their pivot column, every pivot
    /// column is zero outside its pivot row, and the remaining rows are zero.
    pub fn reduce(&mut self, rule: PivotRule) -> Echelon {
        let mut pivot_cols = Vec::new();
        let mut is_pivot = alloc::vec![false; self.ncols];
        loop {
            let rank = pivot_cols.len();
            let active_nnz: usize = self.rows[rank..].iter().map(SparseVec::nnz).sum();
            if active_nnz == 0 {
                break;
            }
            let area = (self.nrows() - rank) * (self.ncols - rank);
            if active_nnz * 100 > area * DENSE_FILL_PERCENT {
                self.reduce_dense_tail(&mut pivot_cols, &mut is_pivot);
                break;
            }
            let (r, c) = match rule {
                PivotRule::Markowitz => self.markowitz_pivot(rank),
                PivotRule::Leftmost => self.leftmost_pivot(rank),
            };
            self.eliminate_with(r, c, rank);
            pivot_cols.push(c);
            is_pivot[c] = true;
        }
        Echelon { pivot_cols }
    }

    fn markowitz_pivot(&self, rank: usize) -> (usize, usize) {
        let mut col_count = alloc::vec![0usize; self.ncols];
        for row in &self.rows[rank..] {
            for (j, _) in row.iter() {
                col_count[j] += 1;
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate().skip(rank) {
            let rc = row.nnz().saturating_sub(1);
            for (c, _) in row.iter() {
                let cost = rc * (col_count[c] - 1);
                if best.is_none_or(|(bc, br, bcol)| (cost, r, c) < (bc, br, bcol)) {
                    best = Some((cost, r, c));
                }
            }
        }
        let (_, r, c) = best.expect("active block is nonzero");
        (r, c)
    }

    fn leftmost_pivot(&self, rank: usize) -> (usize, usize) {
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate().skip(rank) {
            if let Some((c, _)) = row.first() {
                if best.is_none_or(|(bc, br)| (c, r) < (bc, br)) {
                    best = Some((c, r));
                }
            }
        }
        let (c, r) = best.expect("active block is nonzero");
        (r, c)
    }

    /// Moves row `r` to position `rank`, normalizes entry `c` to 1 and clears column `c` elsewhere.
    fn eliminate_with(&mut self, r: usize, c: usize, rank: usize) {
        if r != rank {
            self.apply(RowOp::Swap(r, rank));
        }
        let pv = self.rows[rank].get(c);
        if pv != 1 {
            self.apply(RowOp::Scale { row: rank, factor: self.field.inv(pv) });
        }
        for i in 0..self.nrows() {
            if i == rank {
                continue;
            }
            let v = self.rows[i].get(c);
            if v != 0 {
                self.apply(RowOp::AddMultiple { target: i, source: rank, factor: self.field.neg(v) });
            }
        }
    }

    fn reduce_dense_tail(&mut self, pivot_cols: &mut Vec<usize>, is_pivot: &mut [bool]) {
        let f = self.field;
        let mut dense = self.to_dense();
        let nrows = dense.len();
        for c in 0..self.ncols {
            let rank = pivot_cols.len();
            if rank == nrows {
                break;
            }
            if is_pivot[c] {
                continue;
            }
            let Some(r) = (rank..nrows).find(|&i| dense[i][c] != 0) else {
                continue;
            };
            let mut ops = Vec::new();
            if r != rank {
                dense.swap(r, rank);
                ops.push(RowOp::Swap(r, rank));
            }
            let pv = dense[rank][c];
            if pv != 1 {
                let inv = f.inv(pv);
                for x in dense[rank].iter_mut() {
                    *x = f.mul(*x, inv);
                }
                ops.push(RowOp::Scale { row: rank, factor: inv });
            }
            let (head, tail) = dense.split_at_mut(rank);
            let (pivot_row, tail) = tail.split_first_mut().expect("rank < nrows");
            for (i, row) in head.iter_mut().enumerate().chain(tail.iter_mut().enumerate().map(|(i, r)| (i + rank + 1, r))) {
                let v = row[c];
                if v == 0 {
                    continue;
                }
                let factor = f.neg(v);
                for (x, &y) in row.iter_mut().zip(pivot_row.iter()) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(factor, y));
                    }
                }
                ops.push(RowOp::AddMultiple { target: i, source: rank, factor });
            }
            if let Some(log) = &mut self.basis_log {
                log.extend(ops);
            }
            pivot_cols.push(c);
            is_pivot[c] = true;
        }
        self.rows = dense.iter().map(|r| SparseVec::from_dense(r)).collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> PrimeField {
        PrimeField::default_field()
    }

    #[test]
    fn reduce_identity_and_zero() {
        let mut id = FieldMatrix::identity(field(), 3);
        assert_eq!(id.reduce(PivotRule::Markowitz).rank(), 3);
        let mut z = FieldMatrix::zeros(field(), 2, 4);
        assert_eq!(z.reduce(PivotRule::Markowitz).rank(), 0);
        let mut empty = FieldMatrix::zeros(field(), 0, 0);
        assert_eq!(empty.reduce(PivotRule::Leftmost).rank(), 0);
    }

    #[test]
    fn leftmost_rule_gives_canonical_rref() {
        let f = field();
        let mut m = FieldMatrix::from_i64_rows(f, &[&[0, 2, 4, 2], &[1, 1, 1, 1], &[1, 2, 3, 2]]);
        let e = m.reduce(PivotRule::Leftmost);
        assert_eq!(e.pivot_cols, [0, 1]);
        let expect = FieldMatrix::from_i64_rows(f, &[&[1, 0, -1, 0], &[0, 1, 2, 1], &[0, 0, 0, 0]]);
        assert_eq!(m, expect);
    }

    #[test]
    fn basis_log_replays_exactly() {
        let f = field();
        let original = FieldMatrix::from_i64_rows(
            f,
            &[&[0, 0, 3, 0, 1], &[2, 0, 0, 0, 0], &[0, 5, 0, 0, 7], &[1, 0, 0, 4, 0], &[0, 0, 0, 0, 0]],
        );
        for rule in [PivotRule::Markowitz, PivotRule::Leftmost] {
            let mut m = original.clone().with_basis_log();
            m.reduce(rule);
            let replayed = FieldMatrix::replay(&original, m.basis_log().unwrap());
            assert_eq!(replayed, m);
        }
    }

    #[test]
    fn transpose_and_product() {
        let f = field();
        let a = FieldMatrix::from_i64_rows(f, &[&[1, 2], &[3, 4], &[0, -1]]);
        let b = FieldMatrix::from_i64_rows(f, &[&[1, 0, 2], &[0, 1, 1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, FieldMatrix::from_i64_rows(f, &[&[1, 2, 4], &[3, 4, 10], &[0, -1, -1]]));
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
        assert!(a.mul(&a).is_err());
    }
}
