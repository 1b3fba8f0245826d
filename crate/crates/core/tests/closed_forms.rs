use num_traits::Zero;
use sinesum::csc::{direct_sum, even_sum_exact, matrix_first_row, odd_coeff_row, SumQuery};
use sinesum::exact::{int, pow2, rat};
use sinesum::numeric::{rel_diff, FloatContext, HighPrecFloat};
use sinesum::poly::euler_poly;
use sinesum::Rational;

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn listed_even_sums() {
    for n in 2..=10i64 {
        let h = |k: i64| pow2(k * (n - 1));
        assert_eq!(even_sum_exact(1, n as u32), rat(1, 2) * h(2));
        assert_eq!(even_sum_exact(2, n as u32), rat(1, 6) * (h(4) + int(2) * h(2)));
        assert_eq!(
            even_sum_exact(3, n as u32),
            rat(1, 30) * (int(2) * h(6) + int(5) * h(4) + int(8) * h(2))
        );
        assert_eq!(
            even_sum_exact(4, n as u32),
            rat(1, 630) * (int(17) * h(8) + int(56) * h(6) + int(98) * h(4) + int(144) * h(2))
        );
    }
}

/// Coefficient polynomials in `j` for `csc^3`, `csc^5`, `csc^7`, with `h = 2^{n-1}`.
fn listed_odd(s: u32, n: u32, j: i64) -> Rational {
    let h = 1i64 << (n - 1);
    match s {
        3 => int(-2 * j * j + 2 * (h + 1) * j - h),
        5 => rat(
            2 * j.pow(4) - 4 * (h + 1) * j.pow(3) + 2 * (3 * h - 1) * j * j + 2 * (h.pow(3) + h + 2) * j
                - (h.pow(3) + 2 * h),
            3,
        ),
        7 => rat(
            -4 * j.pow(6) + 12 * (h + 1) * j.pow(5) - 10 * (3 * h - 2) * j.pow(4)
                - 20 * (h.pow(3) + 2 * h + 3) * j.pow(3)
                + 2 * (15 * h.pow(3) + 45 * h - 8) * j * j
                + 4 * (3 * h.pow(5) + 5 * h.pow(3) + 4 * h + 12) * j
                - 3 * (2 * h.pow(5) + 5 * h.pow(3) + 8 * h),
            45,
        ),
        _ => unreachable!(),
    }
}

#[test]
fn listed_odd_rows() {
    for s in [3u32, 5, 7] {
        for n in 2..=8 {
            let row = odd_coeff_row((s - 1) / 2, n);
            let want: Vec<Rational> = (1..=1i64 << (n - 2)).map(|j| listed_odd(s, n, j)).collect();
            assert_eq!(row.entries, want, "s={s} n={n}");
        }
    }
}

/// Rows written as `pre * sum_i c_i 2^{(n-1)(2m-i)} E_{2m-i}(j / 2^{n-1})`.
#[test]
fn euler_polynomial_rows() {
    let table: [(Rational, &[i64]); 6] = [
        (int(2), &[-1, 1]),
        (rat(2, 3), &[1, -2, -1, 2]),
        (rat(4, 45), &[-1, 3, 5, -15, -4, 12]),
        (rat(2, 315), &[1, -4, -14, 56, 49, -196, -36, 144]),
        (rat(4, 14175), &[-1, 5, 30, -150, -273, 1365, 820, -4100, -576, 2880]),
        (rat(4, 467775), &[1, -6, -55, 330, 1023, -6138, -7645, 45870, 21076, -126456, -14400, 86400]),
    ];
    for (idx, (pre, cs)) in table.iter().enumerate() {
        let m = idx as i64 + 1;
        for n in 2..=7i64 {
            let x = pow2(1 - n);
            let want: Vec<Rational> = (1..=1i64 << (n - 2))
                .map(|j| {
                    let y = &x * int(j);
                    let s: Rational = cs
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| {
                            let d = 2 * m - i as i64;
                            int(c) * pow2((n - 1) * d) * euler_poly::<Rational>(d as usize).eval(&y)
                        })
                        .sum();
                    pre * s
                })
                .collect();
            assert_eq!(odd_coeff_row(m as u32, n as u32).entries, want, "m={m} n={n}");
        }
    }
}

#[test]
fn worked_rows() {
    assert_eq!(odd_coeff_row(1, 4).entries, ints(&[8, 20, 28, 32]));
    assert_eq!(odd_coeff_row(2, 3).entries, ints(&[24, 56]));
    assert_eq!(matrix_first_row(1, 4).entries, ints(&[2, 5, 7, 8]));
    assert_eq!(matrix_first_row(1, 3).entries, ints(&[1, 2]));
}

#[test]
fn level_two_single_term() {
    // csc(pi/4) = sqrt 2
    assert_eq!(even_sum_exact(1, 2), int(2));
    assert_eq!(even_sum_exact(3, 2), int(8));
    assert_eq!(odd_coeff_row(1, 2).entries, ints(&[2]));
    let mut cx = FloatContext::new(256);
    let d = direct_sum(SumQuery::new(5, 2).unwrap(), 256).unwrap();
    let r = odd_coeff_row(2, 2).dot_csc(&mut cx);
    assert!(rel_diff(&d, &r).log2_floor() < -200);
}

#[test]
fn direct_sum_examples() {
    let two = direct_sum(SumQuery::new(2, 2).unwrap(), 256).unwrap();
    assert_eq!(two, HighPrecFloat::from_i64(2, 256));
    let eight = direct_sum(SumQuery::new(2, 3).unwrap(), 256).unwrap();
    assert!((&eight - &HighPrecFloat::from_i64(8, 256)).abs().log2_floor() < -240);
    let s34 = direct_sum(SumQuery::new(3, 4).unwrap(), 256).unwrap();
    assert!((s34.to_f64() - 143.30792682).abs() < 1e-8);
    assert!(!even_sum_exact(6, 10).is_zero());
}
