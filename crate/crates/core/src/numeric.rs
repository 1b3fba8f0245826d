//! Binary floating point with caller-chosen precision.
//!
//! Backed by `astro-float`. Arithmetic is correctly rounded to the wider
//! precision of the two operands, round-half-even. Transcendentals go through
//! a [`FloatContext`], which owns the constant cache for one computation and
//! evaluates `sin`, `exp`, `ln` with error below one ulp of the context
//! precision (so `sin`/`csc` stay well inside `2^{3 - precision}` relative).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, Sign};
use serde::{Serialize, Serializer};

use crate::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Clone, Debug)]
pub struct HighPrecFloat {
    value: BigFloat,
    precision: usize,
}

impl HighPrecFloat {
    fn wrap(value: BigFloat, precision: usize) -> Self {
        Self { value, precision }
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_i64(0, precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(v: i64, precision: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, precision), precision)
    }

    pub fn from_f64(v: f64, precision: usize) -> Self {
        Self::wrap(BigFloat::from_f64(v, precision), precision)
    }

    pub fn from_bigint(v: &BigInt, precision: usize) -> Self {
        let (sign, limbs) = v.to_u64_digits();
        // exact accumulation, then a single rounding
        let exact = (limbs.len() * 64).max(64);
        let base = BigFloat::from_u64(1, exact).mul(&BigFloat::from_u64(1 << 32, exact), exact, RM);
        let base = base.mul(&base, exact, RM);
        let mut acc = BigFloat::from_u64(0, exact);
        for limb in limbs.iter().rev() {
            acc = acc.mul(&base, exact, RM).add(&BigFloat::from_u64(*limb, exact), exact, RM);
        }
        if sign == Sign::Minus {
            acc = acc.neg();
        }
        let mut out = Self::wrap(acc, exact);
        out.set_precision(precision);
        out
    }

    pub fn from_rational(r: &Rational, precision: usize) -> Self {
        let n = Self::from_bigint(r.numer(), precision + 64);
        let d = Self::from_bigint(r.denom(), precision + 64);
        Self::wrap(n.value.div(&d.value, precision, RM), precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn set_precision(&mut self, precision: usize) {
        self.value
            .set_precision(precision, RM)
            .expect("precision within backend limits");
        self.precision = precision;
    }

    pub fn with_precision(mut self, precision: usize) -> Self {
        self.set_precision(precision);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.precision)
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.value.powi(n, self.precision, RM), self.precision)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.precision, RM), self.precision)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.precision, RM), self.precision)
    }

    /// Multiply by `2^k` exactly.
    pub fn ldexp(&self, k: i64) -> Self {
        let two = BigFloat::from_u64(2, 64);
        let p = two.powi(k.unsigned_abs() as usize, 64, RM);
        let v = if k >= 0 {
            self.value.mul(&p, self.precision, RM)
        } else {
            self.value.div(&p, self.precision, RM)
        };
        Self::wrap(v, self.precision)
    }

    /// Binary exponent `e` with `2^{e-1} <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            self.value.exponent().map(i64::from)
        }
    }

    /// `log2 |x|` rounded down to an integer; very negative for zero.
    pub fn log2_floor(&self) -> i64 {
        self.exponent().map_or(i64::MIN / 2, |e| e - 1)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_sci_string(20).parse().unwrap_or(f64::NAN)
    }

    /// Scientific decimal rendering with `digits` significant digits.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut cc = Consts::new().expect("constant cache");
        let raw = self.value.format(Radix::Dec, RM, &mut cc).expect("decimal formatting");
        round_decimal(&raw, digits.max(1))
    }

    /// Decimal rendering with as many digits as the precision supports.
    pub fn to_decimal_string(&self) -> String {
        self.to_sci_string(decimal_digits(self.precision))
    }

    pub fn inner(&self) -> &BigFloat {
        &self.value
    }
}

/// Significant decimal digits carried by `precision` bits.
pub fn decimal_digits(precision: usize) -> usize {
    ((precision as f64) * std::f64::consts::LOG10_2).floor() as usize
}

fn round_decimal(raw: &str, digits: usize) -> String {
    let (mant, exp) = match raw.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (raw, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    let all: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).map(|b| b - b'0').collect();
    let lead = all.iter().position(|&d| d != 0).unwrap_or(0);
    let mut exp10 = exp + int_part.len() as i64 - 1 - lead as i64;
    let sig = &all[lead..];
    let mut kept: Vec<u8> = sig.iter().take(digits).cloned().collect();
    if sig.len() > digits && sig[digits] >= 5 {
        let mut i = kept.len();
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exp10 += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    while kept.len() > 1 && kept.last() == Some(&0) {
        kept.pop();
    }
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push((b'0' + kept[0]) as char);
    if kept.len() > 1 {
        s.push('.');
        s.extend(kept[1..].iter().map(|&d| (b'0' + d) as char));
    }
    if exp10 != 0 {
        s.push_str(&format!("e{exp10}"));
    }
    s
}

impl PartialEq for HighPrecFloat {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl PartialOrd for HighPrecFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for &HighPrecFloat {
            type Output = HighPrecFloat;
            fn $m(self, rhs: Self) -> HighPrecFloat {
                let p = self.precision.max(rhs.precision);
                HighPrecFloat::wrap(self.value.$m(&rhs.value, p, RM), p)
            }
        }
        impl $tr for HighPrecFloat {
            type Output = HighPrecFloat;
            fn $m(self, rhs: Self) -> HighPrecFloat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&HighPrecFloat> for HighPrecFloat {
            type Output = HighPrecFloat;
            fn $m(self, rhs: &HighPrecFloat) -> HighPrecFloat {
                (&self).$m(rhs)
            }
        }
    )*};
}
binop!(Add add, Sub sub, Mul mul, Div div);

impl Neg for &HighPrecFloat {
    type Output = HighPrecFloat;

    fn neg(self) -> HighPrecFloat {
        HighPrecFloat::wrap(-self.value.clone(), self.precision)
    }
}

impl Neg for HighPrecFloat {
    type Output = HighPrecFloat;

    fn neg(self) -> HighPrecFloat {
        -&self
    }
}

impl fmt::Display for HighPrecFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(d) => f.write_str(&self.to_sci_string(d)),
            None => f.write_str(&self.to_decimal_string()),
        }
    }
}

impl Serialize for HighPrecFloat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HighPrecFloat", 2)?;
        st.serialize_field("value", &self.to_decimal_string())?;
        st.serialize_field("precision", &self.precision)?;
        st.end()
    }
}

/// Per-computation evaluation context: a precision plus the constant cache
/// that `astro-float` needs for `pi` and the elementary functions.
///
/// Contexts are cheap and are never shared between threads.
pub struct FloatContext {
    precision: usize,
    consts: Consts,
}

impl fmt::Debug for FloatContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FloatContext").field("precision", &self.precision).finish()
    }
}

impl FloatContext {
    pub fn new(precision: usize) -> Self {
        Self { precision, consts: Consts::new().expect("constant cache") }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn int(&self, v: i64) -> HighPrecFloat {
        HighPrecFloat::from_i64(v, self.precision)
    }

    pub fn rational(&self, r: &Rational) -> HighPrecFloat {
        HighPrecFloat::from_rational(r, self.precision)
    }

    pub fn pi(&mut self) -> HighPrecFloat {
        HighPrecFloat::wrap(self.consts.pi(self.precision, RM), self.precision)
    }

    pub fn sin(&mut self, x: &HighPrecFloat) -> HighPrecFloat {
        HighPrecFloat::wrap(x.value.sin(self.precision, RM, &mut self.consts), self.precision)
    }

    pub fn cos(&mut self, x: &HighPrecFloat) -> HighPrecFloat {
        HighPrecFloat::wrap(x.value.cos(self.precision, RM, &mut self.consts), self.precision)
    }

    pub fn exp(&mut self, x: &HighPrecFloat) -> HighPrecFloat {
        HighPrecFloat::wrap(x.value.exp(self.precision, RM, &mut self.consts), self.precision)
    }

    pub fn ln(&mut self, x: &HighPrecFloat) -> HighPrecFloat {
        HighPrecFloat::wrap(x.value.ln(self.precision, RM, &mut self.consts), self.precision)
    }

    /// `x^y` for positive `x`.
    pub fn pow(&mut self, x: &HighPrecFloat, y: &HighPrecFloat) -> HighPrecFloat {
        HighPrecFloat::wrap(x.value.pow(&y.value, self.precision, RM, &mut self.consts), self.precision)
    }

    /// `sin(r pi)` for rational `r`.
    pub fn sin_pi(&mut self, r: &Rational) -> HighPrecFloat {
        let arg = &self.pi() * &self.rational(r);
        self.sin(&arg)
    }

    /// Parse a decimal literal at the context precision.
    pub fn parse(&mut self, s: &str) -> HighPrecFloat {
        HighPrecFloat::wrap(
            BigFloat::parse(s, Radix::Dec, self.precision, RM, &mut self.consts),
            self.precision,
        )
    }
}

/// Relative difference `|a - b| / |b|`, or `|a|` when `b` is zero.
pub fn rel_diff(a: &HighPrecFloat, b: &HighPrecFloat) -> HighPrecFloat {
    let d = (a - b).abs();
    if b.is_zero() {
        d
    } else {
        &d / &b.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn conversions() {
        let big: BigInt = BigInt::from(3) << 200u32;
        let x = HighPrecFloat::from_bigint(&big, 128);
        assert_eq!(x.exponent(), Some(202));
        let y = HighPrecFloat::from_rational(&rat(-1, 3), 256);
        assert!((y.to_f64() + 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(HighPrecFloat::from_i64(12345, 64).to_sci_string(3), "1.23e4");
        assert_eq!(HighPrecFloat::from_f64(0.5, 64).to_sci_string(5), "5e-1");
        assert_eq!(HighPrecFloat::from_f64(9.9996, 64).to_sci_string(4), "1e1");
    }

    #[test]
    fn transcendentals() {
        let mut cx = FloatContext::new(256);
        let pi = cx.pi();
        assert_eq!(pi.to_sci_string(30), "3.14159265358979323846264338328");
        let s = cx.sin_pi(&rat(1, 6));
        let half = HighPrecFloat::from_rational(&rat(1, 2), 256);
        assert!(rel_diff(&s, &half).log2_floor() < -250);
        let two = cx.int(2);
        let l = cx.ln(&two);
        let e = cx.exp(&l);
        assert!(rel_diff(&e, &two).log2_floor() < -250);
    }

    #[test]
    fn ordering_and_json() {
        let a = HighPrecFloat::from_i64(2, 64);
        let b = HighPrecFloat::from_i64(3, 64);
        assert!(a < b);
        assert_eq!(&a + &b, HighPrecFloat::from_i64(5, 64));
        assert_eq!(a.ldexp(3), HighPrecFloat::from_i64(16, 64));
        assert_eq!(b.ldexp(-1).to_sci_string(5), "1.5");
        let j = serde_json::to_string(&HighPrecFloat::from_i64(-7, 64)).unwrap();
        assert_eq!(j, r#"{"value":"-7","precision":64}"#);
    }
}
