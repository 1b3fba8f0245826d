use num_traits::One;

use super::ZetaError;
use crate::exact::{bernoulli_numbers, factorial};
use crate::numeric::{FloatContext, HighPrecFloat};
use crate::Rational;

/// `k^{-s}`, through `powi` when `s` is an integer.
fn inv_pow(cx: &mut FloatContext, k: u64, s: &Rational, sf: &HighPrecFloat) -> HighPrecFloat {
    let kf = HighPrecFloat::from_i64(k as i64, cx.precision());
    if s.is_integer() {
        let e: u64 = s.to_integer().try_into().expect("integer exponent fits in u64");
        kf.powi(e as usize).recip()
    } else {
        let l = cx.ln(&kf);
        let arg = -(sf * &l);
        cx.exp(&arg)
    }
}

/// `zeta(s)` for real `s > 1` by a partial Dirichlet sum with an
/// Euler-Maclaurin tail.
///
/// With `w = precision + 32` working bits the sum runs to `N = w/2` and the
/// tail keeps `w/6 + 4` Bernoulli terms, which puts the truncation error well
/// below `2^{-precision}` for every `s > 1`.
pub fn zeta_reference(s: &Rational, precision: usize) -> Result<HighPrecFloat, ZetaError> {
    if s.is_one() {
        return Err(ZetaError::Pole);
    }
    if s < &Rational::one() {
        return Err(ZetaError::Domain(s.to_string()));
    }
    let w = precision + 32;
    let mut cx = FloatContext::new(w);
    let sf = cx.rational(s);
    let n = (w / 2).max(16) as u64;
    let p = w / 6 + 4;

    let mut sum = HighPrecFloat::zero(w);
    for k in 1..n {
        sum = &sum + &inv_pow(&mut cx, k, s, &sf);
    }
    let nf = cx.int(n as i64);
    let base = inv_pow(&mut cx, n, s, &sf);
    let one = cx.int(1);
    // N^{1-s}/(s-1) + N^{-s}/2
    sum = &sum + &(&(&base * &nf) / &(&sf - &one));
    sum = &sum + &base.ldexp(-1);

    let bern = bernoulli_numbers(2 * p);
    let mut rising = sf.clone();
    let mut q = nf.recip();
    let inv_n2 = (&nf * &nf).recip();
    for j in 1..=p {
        let c = &bern[2 * j] / Rational::from_integer(factorial(2 * j as u64));
        let term = &(&(&cx.rational(&c) * &rising) * &base) * &q;
        sum = &sum + &term;
        let a = &sf + &cx.int(2 * j as i64 - 1);
        let b = &sf + &cx.int(2 * j as i64);
        rising = &(&rising * &a) * &b;
        q = &q * &inv_n2;
    }
    Ok(sum.with_precision(precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn known_values() {
        let z3 = zeta_reference(&int(3), 128).unwrap();
        assert!((z3.to_f64() - 1.2020569031595942).abs() < 1e-15);
        let z2 = zeta_reference(&int(2), 256).unwrap();
        let mut cx = FloatContext::new(256);
        let pi = cx.pi();
        let want = &(&pi * &pi) / &cx.int(6);
        let d = (&z2 - &want).abs();
        assert!(d.log2_floor() < -240);
        let z = zeta_reference(&rat(3, 2), 128).unwrap();
        assert!((z.to_f64() - 2.612375348685488).abs() < 1e-14);
    }

    #[test]
    fn errors() {
        assert_eq!(zeta_reference(&int(1), 64), Err(ZetaError::Pole));
        assert!(matches!(zeta_reference(&rat(1, 2), 64), Err(ZetaError::Domain(_))));
    }
}
