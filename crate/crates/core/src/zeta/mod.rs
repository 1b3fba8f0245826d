//! Zeta values from the cosecant sums: exact even values, the prelimit
//! quantity `Z(m, n)` with its exact error for even `m`, and the odd values
//! through an Euler polynomial integral and the dyadic limit.

mod quad;
mod reference;

use std::fmt;
use std::ops::{Mul, RangeInclusive};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::csc::{direct_sum, even_sum_exact, CscError, SumQuery};
use crate::exact::{bernoulli_number, factorial, int, pow2, serde_rational};
use crate::numeric::{FloatContext, HighPrecFloat};
use crate::poly::gen_bernoulli_poly;
use crate::Rational;

pub use quad::{zeta_odd_integral, QuadratureConfig, QuadratureMethod};
pub use reference::zeta_reference;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("zeta(0) is outside the even-value formula (k must be at least 1)")]
    KZero,
    #[error("zeta has a pole at s = 1")]
    Pole,
    #[error("s = {0} is outside the convergent range s > 1")]
    Domain(String),
    #[error("j = 0 corresponds to the divergent zeta(1)")]
    JZero,
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("{name} = {value} out of range ({range})")]
    Range { name: &'static str, value: i64, range: &'static str },
    #[error(transparent)]
    Csc(#[from] CscError),
}

impl ZetaError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::KZero => "K_ZERO",
            Self::Pole => "POLE",
            Self::Domain(_) => "DOMAIN",
            Self::JZero => "J_ZERO",
            Self::InvalidConfig(_) => "INVALID_CONFIG",
            Self::Range { .. } => "RANGE",
            Self::Csc(e) => e.code(),
        }
    }
}

/// Exact value `coeff * pi^pi_pow`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiMultiple {
    #[serde(with = "serde_rational")]
    pub coeff: Rational,
    pub pi_pow: u32,
}

impl PiMultiple {
    pub fn new(coeff: Rational, pi_pow: u32) -> Self {
        Self { coeff, pi_pow }
    }

    pub fn zero(pi_pow: u32) -> Self {
        Self::new(Rational::zero(), pi_pow)
    }

    /// Sum of two multiples of the same power of `pi`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        (self.pi_pow == other.pi_pow).then(|| Self::new(&self.coeff + &other.coeff, self.pi_pow))
    }

    pub fn to_float(&self, cx: &mut FloatContext) -> HighPrecFloat {
        &cx.pi().powi(self.pi_pow as usize) * &cx.rational(&self.coeff)
    }
}

impl Mul for &PiMultiple {
    type Output = PiMultiple;

    fn mul(self, rhs: Self) -> PiMultiple {
        PiMultiple::new(&self.coeff * &rhs.coeff, self.pi_pow + rhs.pi_pow)
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_pow {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})*pi", self.coeff),
            p => write!(f, "({})*pi^{p}", self.coeff),
        }
    }
}

/// `r_k = (-1)^{k+1} 2^{2k-1} B(2k) / (2k)!`, so that `zeta(2k) = r_k pi^{2k}`.
fn even_ratio(k: u32) -> Rational {
    let s = if k % 2 == 1 { int(1) } else { int(-1) };
    s * pow2(2 * k as i64 - 1) * bernoulli_number(2 * k as usize) / Rational::from_integer(factorial(2 * k as u64))
}

/// `zeta(2k)` as an exact multiple of `pi^{2k}`.
pub fn zeta_even_exact(k: u32) -> Result<PiMultiple, ZetaError> {
    if k == 0 {
        return Err(ZetaError::KZero);
    }
    Ok(PiMultiple::new(even_ratio(k), 2 * k))
}

/// `2^m / (2^m - 1) * 2^{-mn}`
fn z_scale(m: u32, n: u32) -> Rational {
    let p = pow2(m as i64);
    &p / (&p - int(1)) * pow2(-(m as i64) * n as i64)
}

/// `Z(m, n) = (2^m pi^m / (2^m - 1)) sum_i (2^n sin((2i-1) pi / 2^n))^{-m}`,
/// by direct summation.
pub fn z_approx(m: u32, n: u32, precision: usize) -> Result<HighPrecFloat, ZetaError> {
    if m < 2 {
        return Err(ZetaError::Range { name: "m", value: m as i64, range: ">= 2" });
    }
    let s = direct_sum(SumQuery::new(m, n)?, precision + 16)?;
    let mut cx = FloatContext::new(precision + 16);
    let v = &(&cx.pi().powi(m as usize) * &cx.rational(&z_scale(m, n))) * &s;
    Ok(v.with_precision(precision))
}

/// `Z(2k, n)` exactly, from the closed form of `S(2k, n)`.
pub fn z_even_exact(k: u32, n: u32) -> Result<PiMultiple, ZetaError> {
    if k == 0 {
        return Err(ZetaError::KZero);
    }
    if n < 2 {
        return Err(ZetaError::Range { name: "n", value: n as i64, range: ">= 2" });
    }
    Ok(PiMultiple::new(z_scale(2 * k, n) * even_sum_exact(k, n), 2 * k))
}

/// `B_{2(k-j)}^{(2k)}(k) / (2(k-j))!`
fn centered(k: u32, j: u32) -> Rational {
    let d = 2 * (k - j) as usize;
    gen_bernoulli_poly::<Rational>(d, 2 * k).eval(&int(k as i64)) / Rational::from_integer(factorial(d as u64))
}

/// Exact error `R(2k, n) = Z(2k, n) - zeta(2k)`, from the lower even zeta
/// values `zeta(2j)`, `j < k`.
pub fn r_error(k: u32, n: u32) -> Result<PiMultiple, ZetaError> {
    if k == 0 {
        return Err(ZetaError::KZero);
    }
    if n < 2 {
        return Err(ZetaError::Range { name: "n", value: n as i64, range: ">= 2" });
    }
    let (kk, nn) = (k as i64, n as i64);
    let mut acc = Rational::zero();
    for j in 1..k {
        let jj = j as i64;
        let s = if (jj + kk) % 2 == 0 { int(1) } else { int(-1) };
        acc += s * pow2(2 * jj * (nn - 2) + 2 * kk) * (pow2(2 * jj) - int(1)) * centered(k, j) * even_ratio(j);
    }
    Ok(PiMultiple::new(z_scale(2 * k, n) * acc, 2 * k))
}

/// Coefficients `c_j` with `S(2k, n) = sum_j c_j 2^{2j(n-1)} zeta(2j) / pi^{2j}`,
/// listed from `j = k` down to `j = 1`.
pub fn zeta_basis_coefficients(k: u32) -> Result<Vec<Rational>, ZetaError> {
    if k == 0 {
        return Err(ZetaError::KZero);
    }
    let kk = k as i64;
    Ok((1..=k)
        .rev()
        .map(|j| {
            let jj = j as i64;
            let s = if (jj + kk) % 2 == 0 { int(1) } else { int(-1) };
            s * pow2(2 * kk - 2 * jj) * (pow2(2 * jj) - int(1)) * centered(k, j)
        })
        .collect())
}

/// `S(2k, n)` reassembled from [`zeta_basis_coefficients`] and the exact
/// even zeta values.
pub fn even_sum_from_zeta_basis(k: u32, n: u32) -> Result<Rational, ZetaError> {
    let cs = zeta_basis_coefficients(k)?;
    Ok(cs
        .iter()
        .zip((1..=k).rev())
        .map(|(c, j)| c * pow2(2 * j as i64 * (n as i64 - 1)) * even_ratio(j))
        .sum())
}

/// One row of the odd limit table.
#[derive(Debug, Clone, Serialize)]
pub struct LimitRow {
    pub m: u32,
    pub n: u32,
    pub value: HighPrecFloat,
    pub reference: HighPrecFloat,
    pub error: HighPrecFloat,
}

/// Prelimit values
/// `pi^{2m+1} / (2^{2m+1} - 1) * 2^{-(n-1)} * 2^{-2m(n-1)} * S(2m+1, n)`
/// against `zeta(2m+1)`, for each `n` in `ns`.
pub fn zeta_odd_limit_table(m: u32, ns: RangeInclusive<u32>, precision: usize) -> Result<Vec<LimitRow>, ZetaError> {
    if m == 0 {
        return Err(ZetaError::Range { name: "m", value: 0, range: ">= 1" });
    }
    for n in [*ns.start(), *ns.end()] {
        if !(3..=14).contains(&n) {
            return Err(ZetaError::Range { name: "n", value: n as i64, range: "3..=14" });
        }
    }
    let s = 2 * m + 1;
    let w = precision + 16;
    let reference = zeta_reference(&int(s as i64), w)?;
    let mut cx = FloatContext::new(w);
    let pis = cx.pi().powi(s as usize);
    ns.map(|n| {
        let sum = direct_sum(SumQuery::new(s, n)?, w)?;
        let scale = Rational::from_integer(1.into()) / (pow2(s as i64) - int(1)) * pow2(-(s as i64) * (n as i64 - 1));
        let value = &(&pis * &cx.rational(&scale)) * &sum;
        let error = &value - &reference;
        Ok(LimitRow {
            m,
            n,
            value: value.with_precision(precision),
            reference: reference.clone().with_precision(precision),
            error: error.with_precision(precision),
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn even_values() {
        assert_eq!(zeta_even_exact(1).unwrap(), PiMultiple::new(rat(1, 6), 2));
        assert_eq!(zeta_even_exact(2).unwrap(), PiMultiple::new(rat(1, 90), 4));
        assert_eq!(zeta_even_exact(0), Err(ZetaError::KZero));
        let mut cx = FloatContext::new(128);
        let v = zeta_even_exact(1).unwrap().to_float(&mut cx);
        assert!((v.to_f64() - 1.6449340668482264).abs() < 1e-15);
    }

    #[test]
    fn decomposition() {
        for k in 1..=4 {
            for n in 2..=6 {
                let z = z_even_exact(k, n).unwrap();
                let sum = zeta_even_exact(k).unwrap().checked_add(&r_error(k, n).unwrap()).unwrap();
                assert_eq!(z, sum, "k={k} n={n}");
            }
        }
        assert_eq!(r_error(1, 5).unwrap(), PiMultiple::zero(2));
        assert_eq!(z_even_exact(1, 9).unwrap().coeff, rat(1, 6));
    }

    #[test]
    fn basis_table() {
        assert_eq!(zeta_basis_coefficients(3).unwrap(), vec![int(63), int(15), rat(8, 5)]);
        for k in 1..=4 {
            for n in 2..=5 {
                assert_eq!(even_sum_from_zeta_basis(k, n).unwrap(), even_sum_exact(k, n));
            }
        }
    }

    #[test]
    fn pi_multiple_json() {
        let p = PiMultiple::new(rat(1, 90), 4);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeff":"1/90","pi_pow":4}"#);
        assert_eq!(serde_json::from_str::<PiMultiple>(&s).unwrap(), p);
        assert!(p.checked_add(&PiMultiple::zero(2)).is_none());
        assert_eq!(&p * &PiMultiple::new(int(2), 1), PiMultiple::new(rat(1, 45), 5));
    }
}
