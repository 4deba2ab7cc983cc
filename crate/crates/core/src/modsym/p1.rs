use alloc::vec::Vec;

use super::Mat2;
use crate::arith::{gcd, is_prime, mod_inverse, xgcd};

/// A point `(c : d)` of P¹(ℤ/N) in canonical form.
///
/// The canonical representative is the lexicographically smallest pair
/// `(λc mod N, λd mod N)` over units λ. For N = 1 the single point is `(0 : 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    pub c: u64,
    pub d: u64,
}

/// The points of P¹(ℤ/N) in lexicographic order with fast index lookup.
#[derive(Debug, Clone)]
pub struct P1List {
    level: u64,
    points: Vec<ProjectivePoint>,
    lookup: Lookup,
}

#[derive(Debug, Clone)]
enum Lookup {
    Trivial,
    /// N prime: (0:1) is 0 and (1:t) is 1 + t.
    Prime,
    /// Index of every pair (c, d) in [0, N)², or `usize::MAX` when gcd(c, d, N) > 1.
    Table(Vec<usize>),
}

impl P1List {
    pub fn new(level: u64) -> Self {
        assert!(level >= 1, "level must be positive");
        if level == 1 {
            return P1List { level, points: alloc::vec![ProjectivePoint { c: 0, d: 0 }], lookup: Lookup::Trivial };
        }
        if is_prime(level) {
            let mut points = alloc::vec![ProjectivePoint { c: 0, d: 1 }];
            points.extend((0..level).map(|d| ProjectivePoint { c: 1, d }));
            return P1List { level, points, lookup: Lookup::Prime };
        }
        let n = level as usize;
        let units: Vec<u64> = (1..level).filter(|&u| gcd(u as i128, level as i128) == 1).collect();
        let mut canon = alloc::vec![None; n * n];
        for c in 0..level {
            for d in 0..level {
                if gcd(gcd(c as i128, d as i128), level as i128) != 1 {
                    continue;
                }
                let best = units
                    .iter()
                    .map(|&u| ProjectivePoint { c: u * c % level, d: u * d % level })
                    .min()
                    .expect("1 is a unit");
                canon[c as usize * n + d as usize] = Some(best);
            }
        }
        let mut points: Vec<ProjectivePoint> = canon.iter().flatten().copied().collect();
        points.sort_unstable();
        points.dedup();
        let table = canon
            .iter()
            .map(|p| p.map_or(usize::MAX, |p| points.binary_search(&p).expect("canonical point listed")))
            .collect();
        P1List { level, points, lookup: Lookup::Table(table) }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// Index of the class of `(c : d)`, or `None` if gcd(c, d, N) > 1.
    pub fn index(&self, c: i128, d: i128) -> Option<usize> {
        let n = self.level as i128;
        let (c, d) = (c.rem_euclid(n), d.rem_euclid(n));
        match &self.lookup {
            Lookup::Trivial => Some(0),
            Lookup::Prime => {
                if c == 0 {
                    (d != 0).then_some(0)
                } else {
                    let t = d * mod_inverse(c, n).expect("nonzero mod prime") % n;
                    Some(1 + t as usize)
                }
            }
            Lookup::Table(t) => {
                let i = t[c as usize * self.level as usize + d as usize];
                (i != usize::MAX).then_some(i)
            }
        }
    }

    /// A matrix in SL₂(ℤ) whose bottom row reduces to the point.
    pub fn lift(&self, index: usize) -> Mat2 {
        let ProjectivePoint { c, d } = self.points[index];
        lift_to_sl2(c as i128, d as i128, self.level as i128)
    }
}

/// `(a b; c' d')` in SL₂(ℤ) with `(c', d') = (c, d) mod n`; assumes gcd(c, d, n) = 1.
pub fn lift_to_sl2(c: i128, d: i128, n: i128) -> Mat2 {
    if n == 1 {
        return Mat2::IDENTITY;
    }
    let c = if c.rem_euclid(n) == 0 { n } else { c.rem_euclid(n) };
    let mut d = d.rem_euclid(n);
    while gcd(c, d) != 1 {
        d += n;
    }
    // a d - b c = 1
    let (_, x, y) = xgcd(d, c);
    Mat2::new(x, -y, c, d)
}
