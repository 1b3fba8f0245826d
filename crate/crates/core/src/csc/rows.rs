use num_traits::{One, Zero};

use super::{CoefficientRow, SineBasis, TransferMatrix};
use crate::exact::{binomial, factorial, int, pow2};
use crate::poly::{euler_poly, gen_bernoulli_poly};
use crate::{Rational, RationalPoly};

fn half_count(n: u32) -> usize {
    1usize << (n - 2)
}

fn sign(m: u32) -> Rational {
    if m % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `sum_{k<m} x^{2k+1} C(2m-1, 2k) B_{2k}^{(2m)}(m) (E_{2m-2k}(jx)/x - m E_{2m-2k-1}(jx))`
/// for `j = 1..2^{n-2}` and `x = 2^{1-n}`.
fn last_inner(m: u32, n: u32) -> Vec<Rational> {
    let mm = m as usize;
    let x = pow2(1 - n as i64);
    let eul: Vec<RationalPoly> = (0..=2 * mm).map(euler_poly).collect();
    let weights: Vec<Rational> = (0..mm)
        .map(|k| {
            let b = gen_bernoulli_poly::<Rational>(2 * k, 2 * m).eval(&int(m as i64));
            pow2(-((2 * k + 1) as i64) * (n as i64 - 1)) * binomial(2 * m as u64 - 1, 2 * k as i64) * b
        })
        .collect();
    (1..=half_count(n))
        .map(|j| {
            let y = &x * int(j as i64);
            let mut acc = Rational::zero();
            for (k, w) in weights.iter().enumerate() {
                let hi = eul[2 * mm - 2 * k].eval(&y) / &x;
                let lo = eul[2 * mm - 2 * k - 1].eval(&y) * int(m as i64);
                acc += w * (hi - lo);
            }
            acc
        })
        .collect()
}

/// Coefficients `c_j` with `S(2m+1, n) = sum_j c_j csc((2j-1) pi / 2^n)`,
/// from the Euler polynomial closed form.
pub fn odd_coeff_row(m: u32, n: u32) -> CoefficientRow {
    assert!(n >= 2, "level must be at least 2");
    let entries = if m == 0 {
        vec![int(1); half_count(n)]
    } else {
        let pre = sign(m) * pow2(2 * m as i64 * n as i64)
            / Rational::from_integer(factorial(2 * m as u64));
        last_inner(m, n).into_iter().map(|v| v * &pre).collect()
    };
    CoefficientRow::new(n, 2 * m + 1, SineBasis::OddSine, entries)
}

/// Same row through the shifted generalized Bernoulli form with Euler
/// numbers `E_i(0)`.
pub fn odd_coeff_row_alt(m: u32, n: u32) -> CoefficientRow {
    assert!(n >= 2, "level must be at least 2");
    if m == 0 {
        return odd_coeff_row(0, n);
    }
    let mm = m as usize;
    let e0: Vec<Rational> = (0..2 * mm).map(|i| euler_poly::<Rational>(i).eval(&Rational::zero())).collect();
    let bp: Vec<RationalPoly> = (0..2 * mm).map(|i| gen_bernoulli_poly(i, 2 * m)).collect();
    let pre = sign(m) / Rational::from_integer(factorial(2 * m as u64));
    let big = pow2(2 * m as i64 * n as i64);
    let top = 2 * m as u64 - 1;
    let entries = (1..=half_count(n))
        .map(|j| {
            let at = int((m as usize + j) as i64);
            let jm = int(j as i64 - m as i64);
            let mut acc = Rational::zero();
            for k in 0..mm {
                let a = binomial(top, 2 * k as i64 + 1) * bp[2 * k + 1].eval(&at);
                let b = &jm * binomial(top, 2 * k as i64) * bp[2 * k].eval(&at);
                acc += &e0[2 * mm - 2 * k - 1] * pow2(-((2 * k + 1) as i64) * (n as i64 - 1)) * (a + b);
            }
            let head = pow2(2 * m as i64) * &jm * bp[2 * mm - 1].eval(&at);
            &pre * (head + &big * acc)
        })
        .collect();
    CoefficientRow::new(n, 2 * m + 1, SineBasis::OddSine, entries)
}

/// Normalization of the first-row recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RecursionScaling {
    /// `a'(k) = (1/2)(...)`, giving `M_n(1, .)` itself.
    #[default]
    Halved,
    /// The update without the factor `1/2`; `m` steps give `2^m M_n(1, .)`.
    Unscaled,
}

fn step_up(a: &[Rational], scaling: RecursionScaling) -> Vec<Rational> {
    let n = a.len();
    let mut tail: Rational = a.iter().sum();
    let mut head = Rational::zero();
    let half = match scaling {
        RecursionScaling::Halved => Rational::new(1.into(), 2.into()),
        RecursionScaling::Unscaled => Rational::one(),
    };
    (1..=n)
        .map(|k| {
            let odd = int(2 * k as i64 - 1);
            head += &odd * &a[k - 1];
            tail -= &a[k - 1];
            (&head + &odd * &tail) * &half
        })
        .collect()
}

/// First row of `M_n` for power `2m + 1`, by iterating the row recursion
/// from all ones.
pub fn matrix_first_row(m: u32, n: u32) -> CoefficientRow {
    matrix_first_row_with(m, n, RecursionScaling::Halved)
}

pub fn matrix_first_row_with(m: u32, n: u32, scaling: RecursionScaling) -> CoefficientRow {
    assert!(n >= 2, "level must be at least 2");
    let mut a = vec![int(1); half_count(n)];
    for _ in 0..m {
        a = step_up(&a, scaling);
    }
    CoefficientRow::new(n, 2 * m + 1, SineBasis::OddSine, a)
}

/// First row of `M_n` from the closed form in Euler polynomials.
pub fn matrix_first_row_closed(m: u32, n: u32) -> CoefficientRow {
    assert!(n >= 2, "level must be at least 2");
    if m == 0 {
        return matrix_first_row(0, n);
    }
    let pre = sign(m) * pow2(2 * m as i64 * (n as i64 - 1))
        / Rational::from_integer(factorial(2 * m as u64));
    let entries = last_inner(m, n).into_iter().map(|v| v * &pre).collect();
    CoefficientRow::new(n, 2 * m + 1, SineBasis::OddSine, entries)
}

/// Row for power `r - 2` from the row for power `r`:
/// `a'(j) = -a(j-1) + 2a(j) - a(j+1)` with `a(0) = -a(1)`, `a(N+1) = a(N)`.
pub fn step_down(row: &CoefficientRow) -> CoefficientRow {
    assert!(row.power >= 3 && row.basis == SineBasis::OddSine);
    let a = &row.entries;
    let n = a.len();
    let get = |j: usize| -> Rational {
        if j == 0 {
            -a[0].clone()
        } else if j > n {
            a[n - 1].clone()
        } else {
            a[j - 1].clone()
        }
    };
    let entries = (1..=n).map(|j| int(2) * get(j) - get(j - 1) - get(j + 1)).collect();
    CoefficientRow::new(row.n, row.power - 2, SineBasis::OddSine, entries)
}

/// Where angle `b pi / 2^n` lands after folding into `(0, pi/2]`, with the
/// sign picked up by `sin`.
fn fold(b: u64, n: u32) -> (u64, bool) {
    let full = 1u64 << n;
    let mut b = b % (2 * full);
    let mut neg = false;
    if b > full {
        neg = true;
        b -= full;
    }
    if b > full / 2 {
        b = full - b;
    }
    (b, neg)
}

/// All rows of `M_n` for power `2m + 1`, by conjugating the first row with
/// the multipliers `2j - 1`.
pub fn matrix_full(m: u32, n: u32) -> TransferMatrix {
    let first = matrix_first_row(m, n);
    let size = first.len();
    let rows = (1..=size)
        .map(|j| {
            let a = 2 * j as u64 - 1;
            let mut row = vec![Rational::zero(); size];
            for (k, e) in first.entries.iter().enumerate() {
                let (b, neg) = fold((2 * k as u64 + 1) * a, n);
                let slot = &mut row[(b as usize + 1) / 2 - 1];
                *slot = if neg { -e } else { e.clone() };
            }
            CoefficientRow::new(n, 2 * m + 1, SineBasis::OddSine, row)
        })
        .collect();
    TransferMatrix { n, power: 2 * m + 1, rows }
}

/// First row for power `2m + 2` over `sin(k pi / 2^{n-1})`, from the odd row
/// for power `2m + 1`.
pub fn even_row(m: u32, n: u32) -> CoefficientRow {
    let c = matrix_first_row(m, n).entries;
    let size = c.len();
    let mut entries = Vec::with_capacity(size);
    let mut acc = Rational::zero();
    for k in 1..size {
        acc += &c[size - k];
        entries.push(acc.clone());
    }
    let total: Rational = c.iter().sum();
    entries.push(total / int(2));
    CoefficientRow::new(n, 2 * m + 2, SineBasis::HalfSine, entries)
}

/// All rows for power `2m + 2`; row `j` expands `csc^{2m+2}((2j-1) pi / 2^n)`.
pub fn even_matrix_full(m: u32, n: u32) -> TransferMatrix {
    let first = even_row(m, n);
    let size = first.len();
    let rows = (1..=size)
        .map(|j| {
            let a = 2 * j as u64 - 1;
            let chi = a % 4 == 1;
            let mut row = vec![Rational::zero(); size];
            for (k, e) in first.entries.iter().enumerate() {
                let (b, neg) = fold(2 * (k as u64 + 1) * a, n);
                let slot = &mut row[b as usize / 2 - 1];
                *slot = if neg == chi { -e } else { e.clone() };
            }
            CoefficientRow::new(n, 2 * m + 2, SineBasis::HalfSine, row)
        })
        .collect();
    TransferMatrix { n, power: 2 * m + 2, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn first_rows() {
        assert_eq!(matrix_first_row(1, 4).entries, ints(&[2, 5, 7, 8]));
        assert_eq!(matrix_first_row(1, 3).entries, ints(&[1, 2]));
        assert_eq!(matrix_first_row(0, 5).entries, ints(&[1; 8]));
        assert_eq!(matrix_first_row_with(1, 4, RecursionScaling::Unscaled).entries, ints(&[4, 10, 14, 16]));
        assert_eq!(matrix_first_row_closed(1, 4).entries, ints(&[2, 5, 7, 8]));
    }

    #[test]
    fn odd_rows() {
        assert_eq!(odd_coeff_row(1, 4).entries, ints(&[8, 20, 28, 32]));
        assert_eq!(odd_coeff_row(2, 3).entries, ints(&[24, 56]));
        assert_eq!(odd_coeff_row(0, 3).entries, ints(&[1, 1]));
        for m in 0..4 {
            for n in 2..6 {
                assert_eq!(odd_coeff_row_alt(m, n), odd_coeff_row(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn full_matrices() {
        let t = matrix_full(1, 4);
        let want = [[2, 5, 7, 8], [7, 2, -8, 5], [5, 8, 2, -7], [-8, 7, -5, 2]];
        for (r, w) in t.rows.iter().zip(want) {
            assert_eq!(r.entries, ints(&w));
        }
        let t = matrix_full(1, 3);
        assert_eq!(t.rows[1].entries, ints(&[-2, 1]));
    }

    #[test]
    fn even_rows() {
        assert_eq!(even_row(1, 4).entries, ints(&[8, 15, 20, 11]));
        let t = even_matrix_full(1, 4);
        assert_eq!(t.rows[1].entries, ints(&[20, -15, -8, 11]));
        assert_eq!(t.rows[2].entries, ints(&[-20, -15, 8, 11]));
        assert_eq!(t.rows[3].entries, ints(&[-8, 15, -20, 11]));
        assert_eq!(t.column_sums(), ints(&[0, 0, 0, 44]));
    }

    #[test]
    fn downward() {
        for n in 2..6 {
            for m in 1..4 {
                assert_eq!(step_down(&matrix_first_row(m, n)), matrix_first_row(m - 1, n));
            }
        }
    }
}
