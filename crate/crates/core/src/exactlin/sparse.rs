use alloc::vec::Vec;

use super::PrimeField;

/// A sparse vector over a prime field: strictly increasing indices, no zero values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, u64)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec { entries: alloc::vec![(index, 1)] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(field: &PrimeField, mut pairs: Vec<(usize, u64)>) -> Self {
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut entries: Vec<(usize, u64)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some(last) if last.0 == i => last.1 = field.add(last.1, v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|&(_, v)| v != 0);
        SparseVec { entries }
    }

    pub fn from_dense(values: &[u64]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<u64> {
        let mut out = alloc::vec![0; len];
        for &(i, v) in &self.entries {
            out[i] = v;
        }
        out
    }

    pub fn entries(&self) -> &[(usize, u64)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> u64 {
        self.entries.binary_search_by_key(&index, |&(i, _)| i).map(|k| self.entries[k].1).unwrap_or(0)
    }

    pub fn first(&self) -> Option<(usize, u64)> {
        self.entries.first().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|&(i, _)| i)
    }

    pub fn scale(&mut self, field: &PrimeField, c: u64) {
        if c == 0 {
            self.entries.clear();
            return;
        }
        for e in &mut self.entries {
            e.1 = field.mul(e.1, c);
        }
    }

    /// `self += c * other`, merging in one pass.
    pub fn add_scaled(&mut self, field: &PrimeField, c: u64, other: &SparseVec) {
        if c == 0 || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, x)), Some(&&(j, y))) => {
                    if i < j {
                        out.push((i, x));
                        a.next();
                    } else if j < i {
                        out.push((j, field.mul(c, y)));
                        b.next();
                    } else {
                        let s = field.add(x, field.mul(c, y));
                        if s != 0 {
                            out.push((i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&e), None) => {
                    out.push(e);
                    a.next();
                }
                (None, Some(&&(j, y))) => {
                    out.push((j, field.mul(c, y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn dot_dense(&self, field: &PrimeField, dense: &[u64]) -> u64 {
        self.entries.iter().fold(0, |acc, &(i, v)| field.add(acc, field.mul(v, dense[i])))
    }

    pub fn dot(&self, field: &PrimeField, other: &SparseVec) -> u64 {
        let mut acc = 0;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = self.entries[i];
            let (b, y) = other.entries[j];
            if a == b {
                acc = field.add(acc, field.mul(x, y));
                i += 1;
                j += 1;
            } else if a < b {
                i += 1;
            } else {
                j += 1;
            }
        }
        acc
    }
}
