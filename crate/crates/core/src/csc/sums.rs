use num_traits::Zero;

use super::{CscError, SumQuery, MIN_PRECISION};
use crate::exact::{bernoulli_numbers, binomial, factorial, int, pow2};
use crate::numeric::{FloatContext, HighPrecFloat};
use crate::poly::gen_bernoulli_poly;
use crate::Rational;

const GUARD_BITS: usize = 32;

/// `S(s, n)` summed term by term at `precision` bits.
///
/// Terms are evaluated with guard bits and accumulated with Neumaier
/// compensation before rounding back to `precision`.
pub fn direct_sum(q: SumQuery, precision: usize) -> Result<HighPrecFloat, CscError> {
    if precision < MIN_PRECISION {
        return Err(CscError::PrecisionTooLow(precision));
    }
    let w = precision + GUARD_BITS;
    let mut cx = FloatContext::new(w);
    let pi = cx.pi();
    let mut sum = HighPrecFloat::zero(w);
    let mut comp = HighPrecFloat::zero(w);
    for j in 1..=q.terms() {
        let theta = (&pi * &cx.int(2 * j as i64 - 1)).ldexp(-(q.n() as i64));
        let t = cx.sin(&theta).powi(q.s() as usize).recip();
        let next = &sum + &t;
        if sum.abs() >= t.abs() {
            comp = &comp + &(&(&sum - &next) + &t);
        } else {
            comp = &comp + &(&(&t - &next) + &sum);
        }
        sum = next;
    }
    Ok((&sum + &comp).with_precision(precision))
}

/// `B_{2(k-j)}^{(2k)}(k)` for `j = 0..=k`.
fn centered_values(k: u32) -> Vec<Rational> {
    (0..=k as usize)
        .map(|j| gen_bernoulli_poly::<Rational>(2 * (k as usize - j), 2 * k).eval(&int(k as i64)))
        .collect()
}

/// `S(2k, n)` from the Bernoulli number form.
pub fn even_sum_exact_bernoulli(k: u32, n: u32) -> Rational {
    let kk = k as i64;
    let nn = n as i64;
    let bern = bernoulli_numbers(2 * k as usize);
    let cent = centered_values(k);
    let sign = if k % 2 == 1 { int(1) } else { int(-1) };
    let mut acc = Rational::zero();
    for j in 1..=kk {
        let num = pow2(2 * j * (nn - 1) + 2 * kk - 1) * (pow2(2 * j) - int(1));
        let den = factorial(2 * (kk - j) as u64) * factorial(2 * j as u64);
        acc += num / Rational::from_integer(den) * &cent[j as usize] * &bern[2 * j as usize];
    }
    sign * acc
}

/// `S(2k, n)` from the binomial form.
pub fn even_sum_exact_binomial(k: u32, n: u32) -> Rational {
    let kk = k as i64;
    let nn = n as i64;
    let bern = bernoulli_numbers(2 * k as usize);
    let cent = centered_values(k);
    let mut acc = Rational::zero();
    for j in 1..=kk {
        acc += pow2(2 * j * nn - 2 * j)
            * (pow2(2 * j) - int(1))
            * binomial(2 * k as u64, 2 * j)
            * &cent[j as usize]
            * &bern[2 * j as usize];
    }
    let sign = if k % 2 == 1 { int(1) } else { int(-1) };
    sign * pow2(2 * kk - 1) / Rational::from_integer(factorial(2 * k as u64)) * acc
}

/// Exact `S(2k, n)`. Both closed forms are evaluated and must agree.
pub fn even_sum_exact(k: u32, n: u32) -> Rational {
    assert!(k >= 1 && n >= 2, "need k >= 1 and n >= 2");
    let a = even_sum_exact_bernoulli(k, n);
    let b = even_sum_exact_binomial(k, n);
    assert_eq!(a, b, "closed forms disagree at k = {k}, n = {n}");
    a
}
