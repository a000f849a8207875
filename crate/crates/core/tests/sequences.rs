use bihoradam_core::quad_field::{binet_weights, weight_product};
use bihoradam_core::{
    bh_term, bh_term_counted, matrix_power, scalar_term, Bicomplex, EvalStrategy, HoradamParams, QuadContext, Rational,
};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn params() -> impl Strategy<Value = HoradamParams> {
    (small_rational(), small_rational(), small_rational(), small_rational())
        .prop_map(|(a, b, p, q)| HoradamParams::new(a, b, p, q))
}

fn nonzero_q_params() -> impl Strategy<Value = HoradamParams> {
    params().prop_filter("q != 0", |h| *h.q() != Rational::from(0))
}

fn iterative(n: i64, h: &HoradamParams) -> Bicomplex<Rational> {
    bh_term(n, h, EvalStrategy::Iterative).unwrap()
}

/// Bicomplex Fibonacci values listed term by term from the integer sequence.
#[test]
fn fibonacci_table() {
    let f: [i64; 16] = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610];
    let fib = HoradamParams::fibonacci();
    for n in 0..12 {
        let expected = Bicomplex::from_ints(f[n], f[n + 1], f[n + 2], f[n + 3]);
        for s in EvalStrategy::ALL {
            assert_eq!(bh_term(n as i64, &fib, s).unwrap(), expected, "{s} at n={n}");
        }
    }
    // F_{-n} = (-1)^{n+1} F_n
    assert_eq!(iterative(-4, &fib), Bicomplex::from_ints(-3, 2, -1, 1));
}

#[test]
fn pell_table() {
    let pell: [i64; 10] = [0, 1, 2, 5, 12, 29, 70, 169, 408, 985];
    let h = HoradamParams::pell();
    for n in 0..7 {
        let expected = Bicomplex::from_ints(pell[n], pell[n + 1], pell[n + 2], pell[n + 3]);
        assert_eq!(bh_term(n as i64, &h, EvalStrategy::Binet).unwrap(), expected);
    }
}

#[test]
fn degenerate_discriminant_rejected_by_binet_only() {
    let h = HoradamParams::from_ints(1, 3, 2, -1);
    assert!(bh_term(5, &h, EvalStrategy::Binet).is_err());
    // w_n = 1 + 2n
    assert_eq!(iterative(5, &h), Bicomplex::from_ints(11, 13, 15, 17));
    assert_eq!(bh_term(5, &h, EvalStrategy::MatrixPower).unwrap(), iterative(5, &h));
}

#[test]
fn matrix_count_bound_at_two_to_the_twenty() {
    let (_, ops) = bh_term_counted(1 << 20, &HoradamParams::fibonacci(), EvalStrategy::MatrixPower).unwrap();
    assert!(ops.matrix_products <= 2 * 20 + 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_holds(h in params(), n in 0i64..40) {
        let lhs = iterative(n + 2, &h);
        let rhs = iterative(n + 1, &h).scale(h.p()).add_ref(&iterative(n, &h).scale(h.q()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn recurrence_holds_backwards(h in nonzero_q_params(), n in -30i64..0) {
        let lhs = iterative(n + 2, &h);
        let rhs = iterative(n + 1, &h).scale(h.p()).add_ref(&iterative(n, &h).scale(h.q()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn components_shift(h in params(), n in 0i64..40) {
        let here = iterative(n, &h);
        prop_assert_eq!(&here.x, &iterative(n + 1, &h).w);
        prop_assert_eq!(&here.y, &iterative(n + 2, &h).w);
        prop_assert_eq!(&here.z, &iterative(n + 3, &h).w);
    }

    #[test]
    fn strategies_agree(h in params(), n in 0i64..60) {
        let base = iterative(n, &h);
        prop_assert_eq!(&bh_term(n, &h, EvalStrategy::MatrixPower).unwrap(), &base);
        prop_assert_eq!(&bh_term(n, &h, EvalStrategy::GeneratingFunction).unwrap(), &base);
        if h.delta() != Rational::from(0) {
            prop_assert_eq!(&bh_term(n, &h, EvalStrategy::Binet).unwrap(), &base);
        }
    }

    #[test]
    fn negative_indices_agree(h in nonzero_q_params(), n in -25i64..0) {
        let base = iterative(n, &h);
        prop_assert_eq!(&bh_term(n, &h, EvalStrategy::MatrixPower).unwrap(), &base);
        prop_assert_eq!(&bh_term(n, &h, EvalStrategy::GeneratingFunction).unwrap(), &base);
    }

    #[test]
    fn matrix_determinant(h in params(), n in 0u64..30) {
        prop_assert_eq!(matrix_power(&h, n).det(), (-h.q()).pow(n));
    }

    #[test]
    fn matrix_products_logarithmic(n in 1i64..(1 << 16)) {
        let (_, ops) = bh_term_counted(n, &HoradamParams::fibonacci(), EvalStrategy::MatrixPower).unwrap();
        let ceil_log2 = 64 - (n as u64 - 1).leading_zeros() as u64;
        prop_assert!(ops.matrix_products <= 2 * ceil_log2 + 1);
    }

    #[test]
    fn root_relations(p in small_rational(), q in small_rational()) {
        let ctx = QuadContext::new(p.clone(), q.clone());
        prop_assume!(ctx.delta() != Rational::from(0));
        let (alpha, beta) = ctx.roots().unwrap();
        prop_assert_eq!(alpha.try_mul(&beta).unwrap().to_rational().unwrap(), -&q);
        prop_assert_eq!(alpha.try_add(&beta).unwrap().to_rational().unwrap(), p);
    }

    #[test]
    fn weight_product_expansion(h in params()) {
        let ctx = h.context();
        prop_assume!(ctx.delta() != Rational::from(0));
        let (alpha, beta) = ctx.roots().unwrap();
        let (a_w, b_w) = binet_weights(&h, &alpha, &beta);
        let expanded = a_w.try_mul(&b_w).unwrap().to_rational().unwrap();
        let expected = h.b() * h.b() - h.a() * h.b() * h.p() - h.a() * h.a() * h.q();
        prop_assert_eq!(&expanded, &expected);
        prop_assert_eq!(weight_product(&h), expected);
    }

    #[test]
    fn scalar_term_matches_unit_component(h in params(), n in 0i64..40) {
        prop_assert_eq!(scalar_term(n, &h, EvalStrategy::Iterative).unwrap(), iterative(n, &h).w);
    }
}
