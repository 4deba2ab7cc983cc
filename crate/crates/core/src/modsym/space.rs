use alloc::vec::Vec;

use super::cusp::gamma0_equivalent;
use super::manin::frames;
use super::symbol::substitute;
use super::{Cusp, Mat2, ModSymError, ModularSymbol, P1List};
use crate::exactlin::{rank_and_kernel, FieldMatrix, PivotRule, PrimeField, SparseVec, Subspace};

/// Manin-symbol presentation of H¹(Γ₀(N); E_k) over a prime field.
///
/// Generator `point * k + i` is `[X^i Y^(k-1-i), (c : d)] = g({0, ∞} ⊗ X^i Y^(k-1-i))`
/// for any `g ∈ SL₂(ℤ)` with bottom row `(c, d)` mod N. Relations are
/// `x + xσ` and `x + xτ + xτ²` under the right action `[P, (c:d)]h = [h⁻¹P, (c:d)h]`.
#[derive(Debug, Clone)]
pub struct ManinBasisSpace {
    level: u64,
    k: usize,
    field: PrimeField,
    p1: P1List,
    lifts: Vec<Mat2>,
    relation_matrix: FieldMatrix,
    free_generators: Vec<usize>,
    generator_classes: Vec<SparseVec>,
    cusp_classes: Vec<Cusp>,
    boundary: FieldMatrix,
    cuspidal: Subspace,
}

/// Build the space over the default field.
pub fn build_space(level: u64, k: usize) -> Result<ManinBasisSpace, ModSymError> {
    ManinBasisSpace::new(level, k, PrimeField::default_field())
}

impl ManinBasisSpace {
    pub fn new(level: u64, k: usize, field: PrimeField) -> Result<Self, ModSymError> {
        if level == 0 {
            return Err(ModSymError::InvalidLevel);
        }
        if k == 0 || k.is_multiple_of(2) {
            return Err(ModSymError::UnsupportedWeight { k });
        }
        let p1 = P1List::new(level);
        let lifts: Vec<Mat2> = (0..p1.len()).map(|i| p1.lift(i)).collect();
        let ngens = p1.len() * k;
        let mut space = ManinBasisSpace {
            level,
            k,
            field,
            p1,
            lifts,
            relation_matrix: FieldMatrix::zeros(field, 0, ngens),
            free_generators: Vec::new(),
            generator_classes: Vec::new(),
            cusp_classes: Vec::new(),
            boundary: FieldMatrix::zeros(field, 0, 0),
            cuspidal: Subspace::zero(field, 0),
        };
        space.relation_matrix = space.relations();
        space.build_quotient();
        space.build_boundary();
        Ok(space)
    }

    fn generator(&self, point: usize, i: usize) -> usize {
        point * self.k + i
    }

    /// Terms of `[P, point] h` for integer `P`, as (generator, coefficient).
    fn right_act(&self, point: usize, coeffs: &[i128], h: &Mat2) -> Vec<(usize, i128)> {
        let pt = self.p1.points()[point];
        let (c, d) = (pt.c as i128, pt.d as i128);
        let image = self.p1.index(c * h.a + d * h.c, c * h.b + d * h.d).expect("SL2 preserves P1");
        substitute(coeffs, h).into_iter().enumerate().filter(|&(_, v)| v != 0).map(|(i, v)| (self.generator(image, i), v)).collect()
    }

    fn relations(&self) -> FieldMatrix {
        let f = self.field;
        let tau2 = Mat2::TAU.mul(&Mat2::TAU);
        let mut rows = Vec::new();
        for point in 0..self.p1.len() {
            for i in 0..self.k {
                let mut mono = alloc::vec![0i128; self.k];
                mono[i] = 1;
                let x = (self.generator(point, i), 1i128);
                // h⁻¹ acts as substitution by h
                for hs in [&[Mat2::SIGMA][..], &[Mat2::TAU, tau2][..]] {
                    let mut pairs = alloc::vec![(x.0, f.from_i128(x.1))];
                    for h in hs {
                        pairs.extend(self.right_act(point, &mono, h).into_iter().map(|(g, v)| (g, f.from_i128(v))));
                    }
                    let row = SparseVec::from_pairs(&f, pairs);
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
        FieldMatrix::from_rows(f, self.p1.len() * self.k, rows)
    }

    fn build_quotient(&mut self) {
        let f = self.field;
        let ngens = self.p1.len() * self.k;
        let mut reduced = self.relation_matrix.clone();
        let echelon = reduced.reduce(PivotRule::Markowitz);
        let mut pivot_row = alloc::vec![None; ngens];
        for (r, &c) in echelon.pivot_cols.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        self.free_generators = (0..ngens).filter(|&j| pivot_row[j].is_none()).collect();
        let mut position = alloc::vec![usize::MAX; ngens];
        for (q, &j) in self.free_generators.iter().enumerate() {
            position[j] = q;
        }
        self.generator_classes = (0..ngens)
            .map(|j| match pivot_row[j] {
                None => SparseVec::unit(position[j]),
                Some(r) => {
                    let pairs = reduced
                        .row(r)
                        .iter()
                        .filter(|&(c, _)| c != j)
                        .map(|(c, v)| (position[c], f.neg(v)))
                        .collect();
                    SparseVec::from_pairs(&f, pairs)
                }
            })
            .collect();
    }

    fn cusp_class(&mut self, cusp: (i128, i128)) -> usize {
        let z = Cusp::from_i128(cusp.0, cusp.1).expect("lift entries are coprime");
        if let Some(i) = self.cusp_classes.iter().position(|c| gamma0_equivalent(self.level, c.vector(), z.vector())) {
            return i;
        }
        self.cusp_classes.push(z);
        self.cusp_classes.len() - 1
    }

    /// δ[P, (c:d)] = P(1,0)·{g∞} - P(0,1)·{g0} in the boundary space spanned by cusp classes.
    fn build_boundary(&mut self) {
        let f = self.field;
        // every cusp is g(∞) for the lift g of some point
        for point in 0..self.lifts.len() {
            let g = self.lifts[point];
            self.cusp_class((g.a, g.c));
        }
        let mut triples = Vec::new();
        for (q, &j) in self.free_generators.clone().iter().enumerate() {
            let (point, i) = (j / self.k, j % self.k);
            let g = self.lifts[point];
            if i == self.k - 1 {
                triples.push((self.cusp_class((g.a, g.c)), q, 1));
            }
            if i == 0 {
                triples.push((self.cusp_class((g.b, g.d)), q, f.neg(1)));
            }
        }
        let ncusps = self.cusp_classes.len();
        let mut merged: Vec<(usize, usize, u64)> = Vec::new();
        triples.sort_unstable_by_key(|&(r, c, _)| (r, c));
        for (r, c, v) in triples {
            match merged.last_mut() {
                Some(last) if (last.0, last.1) == (r, c) => last.2 = f.add(last.2, v),
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|&(_, _, v)| v != 0);
        self.boundary = FieldMatrix::from_triples(f, ncusps, self.quotient_dim(), merged).expect("indices in range");
        self.cuspidal = rank_and_kernel(&self.boundary).1;
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Dimension k of the coefficient module; the weight is k + 1.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn weight(&self) -> usize {
        self.k + 1
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p1(&self) -> &P1List {
        &self.p1
    }

    pub fn generator_count(&self) -> usize {
        self.p1.len() * self.k
    }

    pub fn relation_matrix(&self) -> &FieldMatrix {
        &self.relation_matrix
    }

    /// Generators whose classes form the quotient basis, in order.
    pub fn free_generators(&self) -> &[usize] {
        &self.free_generators
    }

    pub fn quotient_dim(&self) -> usize {
        self.free_generators.len()
    }

    pub fn cuspidal_subspace(&self) -> &Subspace {
        &self.cuspidal
    }

    pub fn cuspidal_dim(&self) -> usize {
        self.cuspidal.dim()
    }

    pub fn eisenstein_dim(&self) -> usize {
        self.quotient_dim() - self.cuspidal_dim()
    }

    /// Representatives of the Γ₀(N) cusp classes met by the boundary map.
    pub fn cusp_classes(&self) -> &[Cusp] {
        &self.cusp_classes
    }

    /// Boundary map from quotient coordinates to cusp classes.
    pub fn boundary_map(&self) -> &FieldMatrix {
        &self.boundary
    }

    /// Quotient class of generator `point * k + i`.
    pub fn generator_class(&self, generator: usize) -> &SparseVec {
        &self.generator_classes[generator]
    }

    /// Class of the Manin symbol `[P, point]` for integer `P`.
    pub fn manin_class(&self, point: usize, coeffs: &[i128]) -> SparseVec {
        let f = self.field;
        let mut out = SparseVec::new();
        for (i, &v) in coeffs.iter().enumerate() {
            if v != 0 {
                out.add_scaled(&f, f.from_i128(v), &self.generator_classes[self.generator(point, i)]);
            }
        }
        out
    }

    /// Class of `{α, β} ⊗ P` for integer `P` given on `(X, Y)`.
    fn symbol_class_int(&self, alpha: (i128, i128), beta: (i128, i128), coeffs: &[i128]) -> SparseVec {
        let f = self.field;
        let mut out = SparseVec::new();
        for u in frames(alpha, beta) {
            let point = self.p1.index(u.c, u.d).expect("SL2 bottom rows are primitive");
            out.add_scaled(&f, 1, &self.manin_class(point, &substitute(coeffs, &u)));
        }
        out
    }

    /// Class of an arbitrary symbol. Fails if a coefficient denominator vanishes mod p.
    pub fn symbol_class(&self, s: &ModularSymbol) -> Result<SparseVec, ModSymError> {
        if s.coeff.k() != self.k {
            return Err(ModSymError::CoefficientMismatch { expected: self.k, found: s.coeff.k() });
        }
        let f = self.field;
        let mut out = SparseVec::new();
        for u in frames(s.q1.vector(), s.q2.vector()) {
            let point = self.p1.index(u.c, u.d).expect("SL2 bottom rows are primitive");
            for (i, c) in s.coeff.substitute(&u).coeffs().iter().enumerate() {
                if *c.numer() == 0 {
                    continue;
                }
                let v = f.from_rational(c).ok_or(ModSymError::DenominatorVanishes)?;
                out.add_scaled(&f, v, &self.generator_classes[self.generator(point, i)]);
            }
        }
        Ok(out)
    }

    /// Matrix of T_l on the quotient; column j is the image of basis vector j.
    pub fn hecke_operator(&self, l: u64) -> Result<FieldMatrix, ModSymError> {
        if !crate::arith::is_prime(l) {
            return Err(ModSymError::NotPrime { l });
        }
        if self.level.is_multiple_of(l) {
            return Err(ModSymError::BadPrime { l, level: self.level });
        }
        Ok(self.hecke_matrix(l))
    }

    /// T_n for n coprime to the level, from the cosets `(a b; 0 d)`, `ad = n`, `0 <= b < d`.
    pub fn hecke_operator_n(&self, n: u64) -> Result<FieldMatrix, ModSymError> {
        if n == 0 || crate::arith::gcd(n as i128, self.level as i128) != 1 {
            return Err(ModSymError::NotCoprime { n, level: self.level });
        }
        Ok(self.hecke_matrix(n))
    }

    fn hecke_matrix(&self, n: u64) -> FieldMatrix {
        let n = n as i128;
        let cosets: Vec<Mat2> = (1..=n)
            .filter(|d| n % d == 0)
            .flat_map(|d| (0..d).map(move |b| Mat2::new(n / d, b, 0, d)))
            .collect();
        let mut triples = Vec::new();
        for (col, &j) in self.free_generators.iter().enumerate() {
            let (point, i) = (j / self.k, j % self.k);
            let g = self.lifts[point];
            let mut mono = alloc::vec![0i128; self.k];
            mono[i] = 1;
            let mut image = SparseVec::new();
            for gamma in &cosets {
                let h = gamma.mul(&g);
                let q = substitute(&mono, &h.adjugate());
                image.add_scaled(&self.field, 1, &self.symbol_class_int((h.b, h.d), (h.a, h.c), &q));
            }
            triples.extend(image.iter().map(|(row, v)| (row, col, v)));
        }
        let dim = self.quotient_dim();
        FieldMatrix::from_triples(self.field, dim, dim, triples).expect("indices in range")
    }

    /// The winding element `{0, ∞} ⊗ X^m Y^m`, m = (k-1)/2, in quotient coordinates.
    pub fn winding_element(&self) -> SparseVec {
        let m = (self.k - 1) / 2;
        let point = self.p1.index(0, 1).expect("(0:1) is a point");
        self.generator_classes[self.generator(point, m)].clone()
    }
}
