use proptest::prelude::*;
use sinesum::csc::{
    even_matrix_full, even_sum_exact_bernoulli, even_sum_exact_binomial, mat_mul, matrix_first_row,
    matrix_first_row_closed, matrix_first_row_with, matrix_full, odd_coeff_row, odd_coeff_row_alt,
    step_down, transpose, RecursionScaling,
};
use sinesum::exact::{int, parse_rational, pow2, rat};
use sinesum::poly::{euler_poly, gen_bernoulli_explicit, gen_bernoulli_poly};
use sinesum::zeta::{r_error, z_even_exact, zeta_even_exact};
use sinesum::{Rational, RationalPoly};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn small_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec(small_rational(), 0..6).prop_map(RationalPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn odd_row_is_scaled_first_row(m in 0u32..=5, n in 2u32..=8) {
        let scaled = matrix_first_row(m, n).scaled(&pow2(2 * m as i64));
        prop_assert_eq!(odd_coeff_row(m, n).entries, scaled.entries);
    }

    #[test]
    fn recursion_matches_closed_first_row(m in 0u32..=5, n in 2u32..=7) {
        prop_assert_eq!(matrix_first_row(m, n), matrix_first_row_closed(m, n));
    }

    #[test]
    fn unscaled_recursion_is_power_of_two(m in 0u32..=4, n in 2u32..=6) {
        let a = matrix_first_row_with(m, n, RecursionScaling::Unscaled);
        prop_assert_eq!(a.entries, matrix_first_row(m, n).scaled(&pow2(m as i64)).entries);
    }

    #[test]
    fn step_down_inverts_recursion(m in 1u32..=5, n in 2u32..=7) {
        prop_assert_eq!(step_down(&matrix_first_row(m, n)), matrix_first_row(m - 1, n));
    }

    #[test]
    fn rows_are_signed_permutations(m in 0u32..=4, n in 2u32..=6) {
        let t = matrix_full(m, n);
        prop_assert!(t.rows_are_signed_permutations());
        prop_assert_eq!(t.rows[0].clone(), matrix_first_row(m, n));
    }

    #[test]
    fn even_power_two_forms_agree(k in 1u32..=6, n in 2u32..=10) {
        prop_assert_eq!(even_sum_exact_bernoulli(k, n), even_sum_exact_binomial(k, n));
    }

    #[test]
    fn odd_power_two_forms_agree(m in 0u32..=4, n in 2u32..=6) {
        prop_assert_eq!(odd_coeff_row(m, n), odd_coeff_row_alt(m, n));
    }

    #[test]
    fn even_columns_cancel(m in 0u32..=4, n in 3u32..=7) {
        let sums = even_matrix_full(m, n).column_sums();
        let (last, rest) = sums.split_last().unwrap();
        prop_assert!(rest.iter().all(|s| *s == int(0)));
        prop_assert_eq!(last.clone(), sinesum::even_sum_exact(m + 1, n) / pow2(2 * m as i64 + 2));
    }

    #[test]
    fn exact_zeta_decomposition(k in 1u32..=6, n in 2u32..=10) {
        let sum = zeta_even_exact(k).unwrap().checked_add(&r_error(k, n).unwrap()).unwrap();
        prop_assert_eq!(z_even_exact(k, n).unwrap(), sum);
    }

    #[test]
    fn series_and_explicit_bernoulli_agree(n in 0usize..=9, alpha in 0u32..=8) {
        prop_assert_eq!(gen_bernoulli_poly::<Rational>(n, alpha), gen_bernoulli_explicit::<Rational>(n, alpha));
    }

    #[test]
    fn reflection_twice_is_identity(n in 0usize..=9, alpha in 0i64..=8) {
        let b = gen_bernoulli_poly::<Rational>(n, alpha as u32);
        let r = RationalPoly::new(vec![int(alpha), int(-1)]);
        prop_assert_eq!(b.compose(&r).compose(&r), b);
    }

    #[test]
    fn euler_sum_of_shifts(n in 1usize..=12, x in small_rational()) {
        // E_n(x) + E_n(x + 1) = 2 x^n
        let e = euler_poly::<Rational>(n);
        let lhs = e.eval(&x) + e.eval(&(&x + int(1)));
        let mut xn = int(1);
        for _ in 0..n { xn *= &x; }
        prop_assert_eq!(lhs, int(2) * xn);
    }

    #[test]
    fn float_images_track_rationals(n in 0usize..=8, alpha in 0u32..=6, x in -3.0f64..3.0) {
        let exact = gen_bernoulli_poly::<Rational>(n, alpha);
        let f = gen_bernoulli_poly::<f64>(n, alpha);
        let xr = Rational::from_float(x).unwrap();
        let want: f64 = num_traits::ToPrimitive::to_f64(&exact.eval(&xr)).unwrap();
        prop_assert!((f.eval(&x) - want).abs() <= 1e-9 * (1.0 + want.abs()));
    }

    #[test]
    fn poly_ring_laws(a in small_poly(), b in small_poly(), c in small_poly(), x in small_rational()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        if !b.is_zero() {
            let (q, r) = (&a * &b + c.clone()).div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, &(&a * &b) + &c);
        }
    }

    #[test]
    fn rational_text_round_trip(r in small_rational()) {
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
}

#[test]
fn matrices_are_normal_and_commute() {
    for n in 2..=5 {
        let ms: Vec<Vec<Vec<Rational>>> = (1..=3).map(|m| matrix_full(m, n).to_dense()).collect();
        for a in &ms {
            let at = transpose(a);
            assert_eq!(mat_mul(a, &at), mat_mul(&at, a), "n={n}");
            for b in &ms {
                assert_eq!(mat_mul(a, b), mat_mul(b, a), "n={n}");
            }
        }
    }
}
