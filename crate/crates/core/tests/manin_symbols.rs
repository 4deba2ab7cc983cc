use hecke_core::arith::xgcd;
use hecke_core::modsym::{build_space, determinant, unimodularize, Cusp, HomogeneousPoly, Mat2, ModularSymbol};
use hecke_core::Rational;
use proptest::prelude::*;

const HEIGHT: i64 = 1_000_000;

fn cusp() -> impl Strategy<Value = Cusp> {
    (-HEIGHT..=HEIGHT, 0..=HEIGHT)
        .prop_filter("not 0/0", |&(p, q)| (p, q) != (0, 0))
        .prop_map(|(p, q)| Cusp::new(p, q).unwrap())
}

/// An element of Γ₀(N) with bottom row (N t, d).
fn gamma0(level: i128) -> impl Strategy<Value = Mat2> {
    (-50i128..50, -500i128..500).prop_filter_map("bottom row not primitive", move |(t, d)| {
        let c = level * t;
        let (g, x, y) = xgcd(c, d);
        // x c + y d = 1, so (y -x; c d) has determinant 1
        (g == 1).then(|| Mat2::new(y, -x, c, d))
    })
}

fn poly(k: usize) -> impl Strategy<Value = HomogeneousPoly> {
    prop::collection::vec(-5i128..=5, k).prop_map(|c| HomogeneousPoly::new(c.into_iter().map(Rational::from_integer).collect()))
}

fn check_pieces(s: &ModularSymbol, max_len: f64) -> Result<(), TestCaseError> {
    let pieces = unimodularize(s);
    prop_assert!((pieces.len() as f64) <= max_len, "{} pieces", pieces.len());
    if determinant(s) == 0 {
        prop_assert!(pieces.is_empty());
        return Ok(());
    }
    prop_assert_eq!(pieces[0].q1, s.q1);
    prop_assert_eq!(pieces.last().unwrap().q2, s.q2);
    for w in pieces.windows(2) {
        prop_assert_eq!(w[0].q2, w[1].q1);
    }
    prop_assert!(pieces.iter().all(|p| determinant(p) == 1));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn symbols_from_zero(q in cusp()) {
        let s = ModularSymbol::plain(Cusp::integer(0), q);
        check_pieces(&s, 2.0 + (HEIGHT as f64).log2())?;
    }

    #[test]
    fn symbols_between_arbitrary_cusps(q1 in cusp(), q2 in cusp()) {
        let s = ModularSymbol::plain(q1, q2);
        let n = determinant(&s).max(1) as f64;
        check_pieces(&s, 2.0 + n.log2())?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classes_are_additive_and_gamma0_invariant(
        a in cusp(), b in cusp(), c in cusp(), g in gamma0(11), p in poly(3),
    ) {
        let space = build_space(11, 3).unwrap();
        let f = *space.field();
        let class = |x: Cusp, y: Cusp, q: &HomogeneousPoly| space.symbol_class(&ModularSymbol::new(x, y, q.clone())).unwrap();
        let mut sum = class(a, c, &p);
        sum.add_scaled(&f, 1, &class(c, b, &p));
        prop_assert_eq!(sum, class(a, b, &p));
        let moved = ModularSymbol::new(a, b, p.clone()).act(&g);
        prop_assert_eq!(space.symbol_class(&moved).unwrap(), class(a, b, &p));
    }
}
