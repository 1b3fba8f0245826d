use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;

use super::{CheckReport, CheckStatus, IdentityError, IdentityId, Params};
use crate::exact::{binomial, int};
use crate::poly::{euler_poly, gen_bernoulli_poly};
use crate::{Rational, RationalLaurent, RationalPoly};

type Cache = Mutex<HashMap<(usize, u32), RationalPoly>>;

fn bernoulli_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn euler_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `B_n^(alpha)(x)`, memoized.
pub fn bpoly(n: usize, alpha: u32) -> RationalPoly {
    if let Some(p) = bernoulli_cache().lock().unwrap().get(&(n, alpha)) {
        return p.clone();
    }
    let p = gen_bernoulli_poly(n, alpha);
    bernoulli_cache().lock().unwrap().insert((n, alpha), p.clone());
    p
}

/// `E_n(x)`, memoized.
pub fn epoly(n: usize) -> RationalPoly {
    if let Some(p) = euler_cache().lock().unwrap().get(&(n, 0)) {
        return p.clone();
    }
    let p = euler_poly(n);
    euler_cache().lock().unwrap().insert((n, 0), p.clone());
    p
}

/// `B_n^(alpha)(x)` at a point, zero for negative `n`.
pub fn bval(n: i64, alpha: i64, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    assert!(alpha >= 0, "negative order");
    bpoly(n as usize, alpha as u32).eval(x)
}

pub fn bvali(n: i64, alpha: i64, x: i64) -> Rational {
    bval(n, alpha, &int(x))
}

/// `E_n(x)` at a point, zero for negative `n`.
pub fn eval_e(n: i64, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    epoly(n as usize).eval(x)
}

/// `E_n(c x + a)` as a polynomial in `x`, zero for negative `n`.
pub fn e_affine(n: i64, c: &Rational, a: &Rational) -> RationalPoly {
    if n < 0 {
        return RationalPoly::zero();
    }
    epoly(n as usize).compose(&RationalPoly::new(vec![a.clone(), c.clone()]))
}

pub fn c(n: i64, k: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    binomial(n as u64, k)
}

pub fn mono(c: Rational, e: i64) -> RationalLaurent {
    RationalLaurent::monomial(c, e)
}

pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Parameter access with range checks.
pub struct Args<'a> {
    pub id: IdentityId,
    pub p: &'a Params,
}

impl<'a> Args<'a> {
    pub fn new(id: IdentityId, p: &'a Params) -> Self {
        Self { id, p }
    }

    pub fn get(&self, name: &'static str, lo: i64, hi: i64) -> Result<i64, IdentityError> {
        let v = *self
            .p
            .get(name)
            .ok_or(IdentityError::MissingParam { identity: self.id.tag(), name })?;
        if v < lo || v > hi {
            return Err(self.out_of_range(name, v, format!("{lo}..={hi}")));
        }
        Ok(v)
    }

    pub fn out_of_range(&self, name: &'static str, value: i64, range: String) -> IdentityError {
        IdentityError::ParamOutOfRange { identity: self.id.tag(), name, value, range }
    }

    pub fn report(&self, residual: Option<String>) -> CheckReport {
        CheckReport::from_residual(self.id.tag(), self.p.clone(), residual)
    }

    /// Report the displayed form; when it fails, report the variant instead,
    /// keeping the displayed residual in the text.
    pub fn report_or_variant(
        &self,
        displayed: Option<String>,
        label: &str,
        variant: impl FnOnce() -> Option<String>,
    ) -> CheckReport {
        match displayed {
            None => self.report(None),
            Some(d) => {
                let v = variant();
                let status = if v.is_none() { CheckStatus::Pass } else { CheckStatus::Fail };
                let residual = match v {
                    None => format!("displayed form residual: {d}"),
                    Some(vr) => format!("displayed form residual: {d}; variant residual: {vr}"),
                };
                CheckReport {
                    identity: self.id.tag().into(),
                    params: self.p.clone(),
                    status,
                    residual: Some(residual),
                    variant: Some(label.to_string()),
                }
            }
        }
    }
}

pub fn poly_residual(lhs: &RationalPoly, rhs: &RationalPoly) -> Option<String> {
    let d = lhs - rhs;
    (!d.is_zero()).then(|| d.to_string())
}

pub fn rat_residual(lhs: &Rational, rhs: &Rational) -> Option<String> {
    let d = lhs - rhs;
    (!d.is_zero()).then(|| d.to_string())
}

/// Residual of a Laurent identity, rendered after multiplying by `x^{2m}`.
pub fn laurent_residual(lhs: &RationalLaurent, rhs: &RationalLaurent, m: i64) -> Option<String> {
    let d = (lhs - rhs).times_power(2 * m);
    if d.is_zero() {
        return None;
    }
    Some(match d.to_polynomial() {
        Some(p) => format!("x^{}*(L - R) = {p}", 2 * m),
        None => format!("x^{}*(L - R) = {d}", 2 * m),
    })
}
