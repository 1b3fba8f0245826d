use num_bigint::BigInt;

use crate::exact::{binomial_general, factorial, stirling_second};
use crate::poly::{series_kernel, Polynomial, SeriesKernel, TruncatedSeries};
use crate::{Rational, Scalar};

/// Coefficient of `t^n / n!` in `kernel(t) e^{xt}` as a polynomial in `x`.
fn convolve_with_exp<T: Scalar>(kernel: &TruncatedSeries<T>, n: usize) -> Polynomial<T> {
    // n! sum_i K_i x^{n-i} / (n-i)!, built from x^n downwards
    let mut coeffs = vec![T::zero(); n + 1];
    let mut ratio = T::one();
    for i in 0..=n {
        if i > 0 {
            ratio = ratio * T::from_i64((n - i + 1) as i64);
        }
        coeffs[n - i] = kernel.coeff(i) * ratio.clone();
    }
    Polynomial::new(coeffs)
}

/// Euler polynomial `E_n(x)` from `2 e^{xt} / (e^t + 1)`.
pub fn euler_poly<T: Scalar>(n: usize) -> Polynomial<T> {
    convolve_with_exp(&series_kernel::<T>(SeriesKernel::EulerKernel, n, None), n)
}

/// Generalized Bernoulli polynomial `B_n^(alpha)(x)` from
/// `(t / (e^t - 1))^alpha e^{xt}`.
pub fn gen_bernoulli_poly<T: Scalar>(n: usize, alpha: u32) -> Polynomial<T> {
    let k = series_kernel::<T>(SeriesKernel::BernoulliKernel, n, None).pow(alpha);
    convolve_with_exp(&k, n)
}

/// `B_n^(alpha)(x)` through the explicit Stirling double sum.
pub fn gen_bernoulli_explicit<T: Scalar>(n: usize, alpha: u32) -> Polynomial<T> {
    let a = alpha as i64;
    let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); n + 1];
    for k in 0..=n {
        let outer = binomial_general(a + k as i64 - 1, k as i64);
        if outer == BigInt::from(0) {
            continue;
        }
        let outer = if k % 2 == 0 { outer } else { -outer };
        for l in 0..=n - k {
            let top = Rational::from_integer(
                &outer
                    * binomial_general(n as i64, (l + k) as i64)
                    * binomial_general(a + (k + l) as i64, l as i64)
                    * factorial((l + k) as u64)
                    * factorial(k as u64),
            );
            let term = top / Rational::from_integer(factorial((l + 2 * k) as u64))
                * stirling_second(l + 2 * k, k);
            coeffs[n - k - l] += term;
        }
    }
    Polynomial::new(coeffs.iter().map(T::from_rational).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[Rational]) -> Polynomial<Rational> {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn euler_low_degrees() {
        assert_eq!(euler_poly::<Rational>(0), p(&[int(1)]));
        assert_eq!(euler_poly::<Rational>(1), p(&[rat(-1, 2), int(1)]));
        assert_eq!(euler_poly::<Rational>(2), p(&[int(0), int(-1), int(1)]));
        assert_eq!(euler_poly::<Rational>(3), p(&[rat(1, 4), int(0), rat(-3, 2), int(1)]));
    }

    #[test]
    fn generalized_bernoulli_low_degrees() {
        assert_eq!(gen_bernoulli_poly::<Rational>(0, 5), p(&[int(1)]));
        assert_eq!(gen_bernoulli_poly::<Rational>(2, 3), p(&[int(2), int(-3), int(1)]));
        assert_eq!(gen_bernoulli_poly::<Rational>(1, 4), p(&[int(-2), int(1)]));
        assert_eq!(gen_bernoulli_poly::<Rational>(2, 1), p(&[rat(1, 6), int(-1), int(1)]));
        assert_eq!(gen_bernoulli_poly::<Rational>(3, 0), p(&[int(0), int(0), int(0), int(1)]));
    }

    #[test]
    fn explicit_matches_series() {
        for n in 0..=8 {
            for a in 0..=8 {
                assert_eq!(
                    gen_bernoulli_explicit::<Rational>(n, a),
                    gen_bernoulli_poly::<Rational>(n, a),
                    "n = {n}, alpha = {a}"
                );
            }
        }
    }

    #[test]
    fn float_families() {
        let e: Polynomial<f64> = euler_poly(4);
        assert!((e.eval(&0.5) - 5.0 / 16.0).abs() < 1e-15);
        let b: Polynomial<f32> = gen_bernoulli_poly(2, 3);
        assert!(b.eval(&1.0).abs() < 1e-5);
    }
}
