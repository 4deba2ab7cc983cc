//! Dense univariate polynomials over a prime field: just enough for
//! characteristic polynomials and root finding.

use alloc::vec::Vec;

use super::PrimeField;

/// Coefficients low degree first, no trailing zeros. The zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs }
    }

    pub fn one() -> Self {
        FpPoly { coeffs: alloc::vec![1] }
    }

    /// x - a
    pub fn linear_root(field: &PrimeField, a: u64) -> Self {
        FpPoly::new(alloc::vec![field.neg(a), 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 as well, check `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, field: &PrimeField, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn sub(&self, field: &PrimeField, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| field.sub(self.coeffs.get(i).copied().unwrap_or(0), other.coeffs.get(i).copied().unwrap_or(0)))
            .collect();
        FpPoly::new(c)
    }

    pub fn mul(&self, field: &PrimeField, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::new(Vec::new());
        }
        let mut out = alloc::vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        FpPoly::new(out)
    }

    pub fn monic(&self, field: &PrimeField) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = field.inv(self.lead());
        FpPoly::new(self.coeffs.iter().map(|&c| field.mul(c, inv)).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, field: &PrimeField, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (FpPoly::new(Vec::new()), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dl = divisor.coeffs.len();
        let inv = field.inv(divisor.lead());
        let mut quot = alloc::vec![0u64; rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = field.mul(rem[k + dl - 1], inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = field.sub(rem[k + j], field.mul(c, d));
            }
        }
        rem.truncate(dl - 1);
        (FpPoly::new(quot), FpPoly::new(rem))
    }

    pub fn rem(&self, field: &PrimeField, divisor: &FpPoly) -> FpPoly {
        self.div_rem(field, divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, field: &PrimeField, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `base^e mod modulus`.
    pub fn pow_mod(&self, field: &PrimeField, mut e: u64, modulus: &FpPoly) -> FpPoly {
        let mut acc = FpPoly::one().rem(field, modulus);
        let mut base = self.rem(field, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            base = base.mul(field, &base).rem(field, modulus);
            e >>= 1;
        }
        acc
    }

    /// Roots lying in F_p with multiplicities, sorted by value.
    pub fn roots(&self, field: &PrimeField) -> Vec<(u64, usize)> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let f = self.monic(field);
        let x = FpPoly::new(alloc::vec![0, 1]);
        let xp = x.pow_mod(field, field.modulus(), &f);
        let split_part = xp.sub(field, &x).gcd(field, &f);
        let mut roots = Vec::new();
        split_distinct_linear(field, split_part, &mut roots);
        roots.sort_unstable();
        roots
            .into_iter()
            .map(|r| {
                let lin = FpPoly::linear_root(field, r);
                let mut m = 0;
                let mut g = f.clone();
                loop {
                    let (q, rem) = g.div_rem(field, &lin);
                    if !rem.is_zero() {
                        break;
                    }
                    m += 1;
                    g = q;
                }
                (r, m)
            })
            .collect()
    }
}

/// Equal-degree splitting of a product of distinct monic linear factors.
/// Shifts `a = 0, 1, 2, ...` are tried in order, keeping the result deterministic.
fn split_distinct_linear(field: &PrimeField, g: FpPoly, out: &mut Vec<u64>) {
    match g.degree() {
        0 => {}
        1 => out.push(field.neg(g.coeffs[0])),
        _ => {
            let half = (field.modulus() - 1) / 2;
            for a in 0u64.. {
                let shift = FpPoly::new(alloc::vec![a, 1]);
                let h = shift.pow_mod(field, half, &g).sub(field, &FpPoly::one()).gcd(field, &g);
                if !h.is_zero() && h.degree() > 0 && h.degree() < g.degree() {
                    let (q, _) = g.div_rem(field, &h);
                    split_distinct_linear(field, h, out);
                    split_distinct_linear(field, q.monic(field), out);
                    return;
                }
            }
        }
    }
}

/// Characteristic polynomial det(xI - A) of a dense square matrix, via Hessenberg reduction.
pub fn charpoly(field: &PrimeField, matrix: &[Vec<u64>]) -> FpPoly {
    let n = matrix.len();
    let mut h: Vec<Vec<u64>> = matrix.to_vec();
    // Similarity transform to upper Hessenberg form.
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = field.inv(h[j + 1][j]);
        for i in j + 2..n {
            let u = field.mul(h[i][j], inv);
            if u == 0 {
                continue;
            }
            let (upper, lower) = h.split_at_mut(i);
            for (x, &y) in lower[0].iter_mut().zip(&upper[j + 1]) {
                *x = field.sub(*x, field.mul(u, y));
            }
            for row in h.iter_mut() {
                let t = field.mul(u, row[i]);
                row[j + 1] = field.add(row[j + 1], t);
            }
        }
    }
    let mut p: Vec<FpPoly> = Vec::with_capacity(n + 1);
    p.push(FpPoly::one());
    for m in 1..=n {
        let lin = FpPoly::new(alloc::vec![field.neg(h[m - 1][m - 1]), 1]);
        let mut pm = lin.mul(field, &p[m - 1]);
        let mut t = 1u64;
        for i in 1..m {
            t = field.mul(t, h[m - i][m - i - 1]);
            let c = field.mul(t, h[m - i - 1][m - 1]);
            if c != 0 {
                let term = FpPoly::new(p[m - i - 1].coeffs.iter().map(|&x| field.mul(x, c)).collect());
                pm = pm.sub(field, &term);
            }
        }
        p.push(pm);
    }
    p.pop().expect("p_0 present")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    #[test]
    fn charpoly_two_by_two() {
        let f = f();
        // [[1, 2], [3, 4]]: x^2 - 5x - 2
        let m = alloc::vec![alloc::vec![1, 2], alloc::vec![3, 4]];
        assert_eq!(charpoly(&f, &m).coeffs(), &[f.neg(2), f.neg(5), 1]);
    }

    #[test]
    fn roots_with_multiplicity() {
        let f = f();
        // (x - 1)^2 (x + 2) (x^2 + 1)
        let mut g = FpPoly::one();
        for r in [1, 1, f.neg(2)] {
            g = g.mul(&f, &FpPoly::linear_root(&f, r));
        }
        // 2^61 - 1 = 3 mod 4, so x^2 + 1 has no roots.
        g = g.mul(&f, &FpPoly::new(alloc::vec![1, 0, 1]));
        assert_eq!(g.roots(&f), [(1, 2), (f.neg(2), 1)]);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = f();
        let a = FpPoly::new(alloc::vec![5, 0, 3, 7, 1]);
        let b = FpPoly::new(alloc::vec![2, 1, 4]);
        let (q, r) = a.div_rem(&f, &b);
        let back = q.mul(&f, &b).sub(&f, &FpPoly::new(r.coeffs().iter().map(|&c| f.neg(c)).collect()));
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }
}
