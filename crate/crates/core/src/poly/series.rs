use std::ops::{Add, Mul, Neg, Sub};

use crate::{Rational, Scalar};

/// Power series in `t` truncated after `t^N`.
///
/// Binary operations truncate to the smaller order of the two operands.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKernel {
    /// `t / (e^t - 1)`
    BernoulliKernel,
    /// `2 / (e^t + 1)`
    EulerKernel,
    /// `e^{xt}`
    Exp,
}

fn inverse_factorials<T: Scalar>(order: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(order + 1);
    let mut f = T::one();
    for k in 0..=order {
        if k > 0 {
            f = f / T::from_i64(k as i64);
        }
        out.push(f.clone());
    }
    out
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Series from coefficients of `t^0..t^N`; `N = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least t^0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// `e^{xt}`
    pub fn exp(order: usize, x: &T) -> Self {
        let mut p = T::one();
        let coeffs = inverse_factorials::<T>(order)
            .into_iter()
            .map(|f| {
                let v = f * p.clone();
                p = p.clone() * x.clone();
                v
            })
            .collect();
        Self { coeffs }
    }

    pub fn sin(order: usize) -> Self {
        Self::alternating(order, 1)
    }

    pub fn cos(order: usize) -> Self {
        Self::alternating(order, 0)
    }

    /// `sinh(t) / t`
    pub fn sinhc(order: usize) -> Self {
        let f = inverse_factorials::<T>(order + 1);
        Self {
            coeffs: (0..=order)
                .map(|k| if k % 2 == 0 { f[k + 1].clone() } else { T::zero() })
                .collect(),
        }
    }

    /// `(e^t - 1) / t`
    pub fn expm1c(order: usize) -> Self {
        let f = inverse_factorials::<T>(order + 1);
        Self { coeffs: f[1..].to_vec() }
    }

    fn alternating(order: usize, parity: usize) -> Self {
        let f = inverse_factorials::<T>(order);
        let coeffs = f
            .into_iter()
            .enumerate()
            .map(|(k, c)| match (k % 2 == parity, (k / 2) % 2 == 0) {
                (false, _) => T::zero(),
                (true, true) => c,
                (true, false) => -c,
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse; `None` when the constant term is zero.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut out: Vec<T> = Vec::with_capacity(n);
        out.push(T::one() / c0.clone());
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(-acc / c0.clone());
        }
        Some(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient of `t^n / n!`.
    pub fn egf_coeff(&self, n: usize) -> T {
        let fact = (1..=n as i64).fold(T::one(), |acc, i| acc * T::from_i64(i));
        self.coeff(n) * fact
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// Generating-function kernel through `t^order`.
///
/// `x` only matters for [`SeriesKernel::Exp`] and defaults to 1.
pub fn series_kernel<T: Scalar>(kind: SeriesKernel, order: usize, x: Option<&T>) -> TruncatedSeries<T> {
    match kind {
        SeriesKernel::BernoulliKernel => TruncatedSeries::expm1c(order)
            .inverse()
            .expect("(e^t - 1)/t has unit constant term"),
        SeriesKernel::EulerKernel => {
            let mut denom = TruncatedSeries::exp(order, &T::one());
            denom.coeffs[0] = denom.coeffs[0].clone() + T::one();
            denom
                .inverse()
                .expect("e^t + 1 has unit constant term")
                .scale(&T::from_i64(2))
        }
        SeriesKernel::Exp => TruncatedSeries::exp(order, x.unwrap_or(&T::one())),
    }
}

impl TruncatedSeries<Rational> {
    /// `tan(t) = sin(t) / cos(t)` by exact series division.
    pub fn tan(order: usize) -> Self {
        Self::sin(order).div(&Self::cos(order)).expect("cos has unit constant term")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn rs(v: &[Rational]) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(v.to_vec())
    }

    #[test]
    fn kernels() {
        let b: TruncatedSeries<Rational> = series_kernel(SeriesKernel::BernoulliKernel, 4, None);
        assert_eq!(b.coeffs(), &[int(1), rat(-1, 2), rat(1, 12), int(0), rat(-1, 720)]);
        let e: TruncatedSeries<Rational> = series_kernel(SeriesKernel::Exp, 2, Some(&int(1)));
        assert_eq!(e.coeffs(), &[int(1), int(1), rat(1, 2)]);
        let k: TruncatedSeries<Rational> = series_kernel(SeriesKernel::EulerKernel, 0, None);
        assert_eq!(k.coeffs(), &[int(1)]);
        let k: TruncatedSeries<Rational> = series_kernel(SeriesKernel::EulerKernel, 3, None);
        assert_eq!(k.coeffs(), &[int(1), rat(-1, 2), int(0), rat(1, 24)]);
    }

    #[test]
    fn inverse_and_division() {
        let s = rs(&[int(2), int(1), int(0), int(3)]);
        let prod = &s * &s.inverse().unwrap();
        assert_eq!(prod, TruncatedSeries::one(3));
        assert!(rs(&[int(0), int(1)]).inverse().is_none());
        let t = TruncatedSeries::<Rational>::tan(7);
        assert_eq!(t.coeffs(), &[int(0), int(1), int(0), rat(1, 3), int(0), rat(2, 15), int(0), rat(17, 315)]);
    }

    #[test]
    fn power_and_order() {
        let s = rs(&[int(1), int(1)]);
        assert_eq!(s.pow(3).coeffs(), &[int(1), int(3)]);
        let s = rs(&[int(1), int(1), int(0), int(0)]);
        assert_eq!(s.pow(3).coeffs(), &[int(1), int(3), int(3), int(1)]);
        assert_eq!(s.pow(0), TruncatedSeries::one(3));
        let short = rs(&[int(1), int(2)]);
        assert_eq!((&s + &short).order(), 1);
    }

    #[test]
    fn trig_squares() {
        let s = TruncatedSeries::<Rational>::sin(10);
        let c = TruncatedSeries::<Rational>::cos(10);
        assert_eq!(&(&s * &s) + &(&c * &c), TruncatedSeries::one(10));
    }

    #[test]
    fn float_kernel() {
        let b: TruncatedSeries<f64> = series_kernel(SeriesKernel::BernoulliKernel, 4, None);
        assert!((b.coeff(2) - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(b.egf_coeff(1), -0.5);
    }
}
