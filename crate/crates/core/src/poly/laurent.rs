use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Polynomial;
use crate::{Rational, Scalar};

/// `x^shift * poly(x)` with `poly(0) != 0`, or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<T> {
    shift: i64,
    poly: Polynomial<T>,
}

impl<T: Scalar> LaurentPolynomial<T> {
    pub fn new(shift: i64, poly: Polynomial<T>) -> Self {
        if poly.is_zero() {
            return Self::zero();
        }
        let lead = poly.coeffs().iter().take_while(|c| c.is_zero()).count();
        let poly = Polynomial::new(poly.coeffs()[lead..].to_vec());
        Self { shift: shift + lead as i64, poly }
    }

    pub fn zero() -> Self {
        Self { shift: 0, poly: Polynomial::zero() }
    }

    pub fn from_poly(poly: Polynomial<T>) -> Self {
        Self::new(0, poly)
    }

    pub fn monomial(c: T, exponent: i64) -> Self {
        Self::new(exponent, Polynomial::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.poly.degree().map(|d| self.shift + d as i64)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn poly(&self) -> &Polynomial<T> {
        &self.poly
    }

    pub fn coeff(&self, exponent: i64) -> T {
        let i = exponent - self.shift;
        if i < 0 {
            T::zero()
        } else {
            self.poly.coeff(i as usize)
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.shift, self.poly.scale(c))
    }

    /// `x^k * self`
    pub fn times_power(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { shift: self.shift + k, poly: self.poly.clone() }
    }

    /// The ordinary polynomial, when no negative power occurs.
    pub fn to_polynomial(&self) -> Option<Polynomial<T>> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        (self.shift >= 0).then(|| &Polynomial::monomial(T::one(), self.shift as usize) * &self.poly)
    }
}

impl<T: Scalar> Add for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn add(self, rhs: Self) -> LaurentPolynomial<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = &Polynomial::monomial(T::one(), (self.shift - s) as usize) * &self.poly;
        let b = &Polynomial::monomial(T::one(), (rhs.shift - s) as usize) * &rhs.poly;
        LaurentPolynomial::new(s, a + b)
    }
}

impl<T: Scalar> Neg for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn neg(self) -> LaurentPolynomial<T> {
        LaurentPolynomial { shift: self.shift, poly: -&self.poly }
    }
}

impl<T: Scalar> Sub for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn sub(self, rhs: Self) -> LaurentPolynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn mul(self, rhs: Self) -> LaurentPolynomial<T> {
        LaurentPolynomial::new(self.shift + rhs.shift, &self.poly * &rhs.poly)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for LaurentPolynomial<T> {
            type Output = LaurentPolynomial<T>;
            fn $m(self, rhs: Self) -> LaurentPolynomial<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> From<Polynomial<T>> for LaurentPolynomial<T> {
    fn from(p: Polynomial<T>) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for LaurentPolynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| format!("({c})*x^{}", self.shift + i as i64))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn canonical_shift() {
        let l = LaurentPolynomial::new(-3, Polynomial::new(vec![int(0), int(0), int(5)]));
        assert_eq!(l.shift(), -1);
        assert_eq!(l.coeff(-1), int(5));
        assert_eq!(l.coeff(-3), int(0));
        assert_eq!(LaurentPolynomial::<Rational>::new(4, Polynomial::zero()).shift(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = LaurentPolynomial::monomial(rat(1, 2), -1);
        let b = LaurentPolynomial::monomial(int(3), 2);
        let s = &a + &b;
        assert_eq!(s.min_exponent(), Some(-1));
        assert_eq!(s.max_exponent(), Some(2));
        assert_eq!((&s - &a), b);
        assert_eq!((&a * &b), LaurentPolynomial::monomial(rat(3, 2), 1));
        assert!((&s - &s).is_zero());
        assert_eq!(s.times_power(1).to_polynomial().unwrap().coeffs(), &[rat(1, 2), int(0), int(0), int(3)]);
        assert!(s.to_polynomial().is_none());
        assert_eq!(a.to_string(), "(1/2)*x^-1");
    }
}
