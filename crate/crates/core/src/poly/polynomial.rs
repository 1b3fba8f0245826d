use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Rational, Scalar};

/// Dense univariate polynomial, coefficients in ascending powers of `x`.
///
/// Canonical: no trailing zeros, the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The formal variable `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `(x - r_1)(x - r_2)...`
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![-r.clone(), T::one()])
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut k = T::zero();
        let coeffs = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| {
                k = k.clone() + T::one();
                c.clone() * k.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * inner.clone() + Self::constant(c.clone()))
    }

    /// `self(x + a)`
    pub fn shift(&self, a: &T) -> Self {
        self.compose(&Self::new(vec![a.clone(), T::one()]))
    }

    /// `self(c x)`
    pub fn scale_arg(&self, c: &T) -> Self {
        let mut p = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a.clone() * p.clone();
                p = p.clone() * c.clone();
                v
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = rem[i + d].clone() / lead.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * c.clone();
            }
            quot[i] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<Rational> {
    /// Float image of an exact polynomial.
    pub fn to_scalar<U: Scalar>(&self) -> Polynomial<U> {
        self.map(U::from_rational)
    }
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: &Self) -> Polynomial<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial<Rational> {
    /// Ascending powers, e.g. `2 - 3*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let neg = num_traits::Signed::is_negative(c);
            let mag = num_traits::Signed::abs(c);
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = num_traits::One::is_one(&mag);
            match i {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::exact::serde_rationals::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        crate::exact::serde_rationals::deserialize(d).map(Self::new)
    }
}

/// Exact Horner evaluation.
pub fn poly_eval(p: &Polynomial<Rational>, x0: &Rational) -> Rational {
    p.eval(x0)
}

pub fn poly_derivative<T: Scalar>(p: &Polynomial<T>) -> Polynomial<T> {
    p.derivative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn canonical_form() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(Polynomial::<Rational>::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[-1, 1]);
        let b = p(&[-2, 1]);
        let ab = &a * &b;
        assert_eq!(ab, p(&[2, -3, 1]));
        assert_eq!(ab.eval(&int(1)), int(0));
        assert_eq!((&ab - &ab), Polynomial::zero());
        assert_eq!(Polynomial::from_roots(&[int(1), int(2)]), ab);
        assert_eq!(poly_eval(&p(&[0, -1, 1]), &rat(1, 2)), rat(-1, 4));
        assert_eq!(poly_eval(&Polynomial::zero(), &rat(7, 3)), int(0));
    }

    #[test]
    fn composition_and_shift() {
        let q = p(&[1, 2, 3]);
        let s = q.shift(&int(1));
        assert_eq!(s, p(&[6, 8, 3]));
        assert_eq!(q.compose(&p(&[0, 2])), q.scale_arg(&int(2)));
        let reflect = p(&[2, -1]);
        assert_eq!(q.compose(&reflect).compose(&reflect), q);
    }

    #[test]
    fn division() {
        let num = p(&[2, -3, 1]);
        let (q, r) = num.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(q, Polynomial::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn derivative() {
        assert!(p(&[5]).derivative().is_zero());
        assert_eq!(p(&[0, -1, 1]).derivative(), p(&[-1, 2]));
        assert_eq!(p(&[1, 1, 1, 1]).nth_derivative(2), p(&[2, 6]));
    }

    #[test]
    fn display_and_json() {
        let q = p(&[2, -3, 1]);
        assert_eq!(q.to_string(), "2 - 3*x + x^2");
        assert_eq!(Polynomial::new(vec![int(0), rat(-1, 2)]).to_string(), "-1/2*x");
        let json = serde_json::to_string(&Polynomial::new(vec![rat(-1, 2), int(1)])).unwrap();
        assert_eq!(json, r#"["-1/2","1"]"#);
        let back: Polynomial<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.coeffs(), &[rat(-1, 2), int(1)]);
    }

    #[test]
    fn float_image() {
        let q = Polynomial::new(vec![rat(1, 4), int(-1), int(1)]);
        let f: Polynomial<f64> = q.to_scalar();
        assert_eq!(f.eval(&0.5), 0.0);
        let g: Polynomial<f32> = q.to_scalar();
        assert_eq!(g.eval(&2.0), 2.25);
    }
}
