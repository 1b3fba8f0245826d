use serde::{Deserialize, Serialize};

use super::ZetaError;
use crate::exact::{factorial, int, pow2};
use crate::numeric::{FloatContext, HighPrecFloat};
use crate::poly::euler_poly;
use crate::{Rational, DEFAULT_PRECISION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum QuadratureMethod {
    AdaptiveSimpson,
    GaussLegendrePanels,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub method: QuadratureMethod,
    /// Absolute tolerance on the integral.
    pub abs_tolerance: f64,
    /// Recursion limit for adaptive Simpson.
    pub max_depth: u32,
    /// Equal panels for Gauss-Legendre.
    pub panels: u32,
    pub precision: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            method: QuadratureMethod::AdaptiveSimpson,
            abs_tolerance: 1e-15,
            max_depth: 48,
            panels: 16,
            precision: DEFAULT_PRECISION,
        }
    }
}

/// Gauss-Legendre order used on each panel.
const GL_ORDER: usize = 20;

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), ZetaError> {
        let floor = 2f64.powi(16 - self.precision as i32);
        if !(self.abs_tolerance.is_finite() && self.abs_tolerance > 0.0) {
            return Err(ZetaError::InvalidConfig("tolerance must be positive and finite".into()));
        }
        if self.abs_tolerance < floor {
            return Err(ZetaError::InvalidConfig(format!(
                "tolerance {:e} is below 2^(16 - {}) = {floor:e}",
                self.abs_tolerance, self.precision
            )));
        }
        if self.panels == 0 {
            return Err(ZetaError::InvalidConfig("need at least one panel".into()));
        }
        if self.precision < 64 {
            return Err(ZetaError::InvalidConfig("precision below 64 bits".into()));
        }
        Ok(())
    }
}

/// `E_{2j}(x) csc(pi x)` on `[0, 1/2]`, continued to `x = 0` by its limit.
struct Integrand {
    coeffs: Vec<HighPrecFloat>,
    at_zero: HighPrecFloat,
    pi: HighPrecFloat,
}

impl Integrand {
    fn new(j: u32, cx: &mut FloatContext) -> Self {
        let e = euler_poly::<Rational>(2 * j as usize);
        let coeffs = e.coeffs().iter().map(|c| cx.rational(c)).collect();
        let pi = cx.pi();
        // E_{2j}(x) / sin(pi x) -> E'_{2j}(0) / pi = 2j E_{2j-1}(0) / pi
        let d0 = euler_poly::<Rational>(2 * j as usize - 1).eval(&Rational::default()) * int(2 * j as i64);
        let at_zero = &cx.rational(&d0) / &pi;
        Self { coeffs, at_zero, pi }
    }

    fn eval(&self, cx: &mut FloatContext, x: &HighPrecFloat) -> HighPrecFloat {
        if x.is_zero() {
            return self.at_zero.clone();
        }
        let mut acc = HighPrecFloat::zero(cx.precision());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        let s = cx.sin(&(&self.pi * x));
        &acc / &s
    }
}

struct Simpson<'a> {
    f: &'a Integrand,
    cx: &'a mut FloatContext,
}

impl Simpson<'_> {
    #[allow(clippy::too_many_arguments)]
    fn step(
        &mut self,
        a: &HighPrecFloat,
        b: &HighPrecFloat,
        fa: &HighPrecFloat,
        fm: &HighPrecFloat,
        fb: &HighPrecFloat,
        whole: &HighPrecFloat,
        tol: &HighPrecFloat,
        depth: u32,
    ) -> HighPrecFloat {
        let m = (a + b).ldexp(-1);
        let lm = (a + &m).ldexp(-1);
        let rm = (&m + b).ldexp(-1);
        let flm = self.f.eval(self.cx, &lm);
        let frm = self.f.eval(self.cx, &rm);
        let six = self.cx.int(6);
        let four = self.cx.int(4);
        let left = &(&(&m - a) / &six) * &(&(fa + &(&four * &flm)) + fm);
        let right = &(&(b - &m) / &six) * &(&(fm + &(&four * &frm)) + fb);
        let delta = &(&left + &right) - whole;
        let fifteen = self.cx.int(15);
        if depth == 0 || delta.abs() <= &fifteen * tol {
            return &(&left + &right) + &(&delta / &fifteen);
        }
        let half = tol.ldexp(-1);
        let l = self.step(a, &m, fa, &flm, fm, &left, &half, depth - 1);
        let r = self.step(&m, b, fm, &frm, fb, &right, &half, depth - 1);
        &l + &r
    }
}

fn adaptive_simpson(f: &Integrand, cx: &mut FloatContext, a: &HighPrecFloat, b: &HighPrecFloat, tol: &HighPrecFloat, depth: u32) -> HighPrecFloat {
    let m = (a + b).ldexp(-1);
    let fa = f.eval(cx, a);
    let fm = f.eval(cx, &m);
    let fb = f.eval(cx, b);
    let six = cx.int(6);
    let four = cx.int(4);
    let whole = &(&(b - a) / &six) * &(&(&fa + &(&four * &fm)) + &fb);
    Simpson { f, cx }.step(a, b, &fa, &fm, &fb, &whole, tol, depth)
}

/// Nodes and weights of the `q`-point Gauss-Legendre rule on `[-1, 1]`.
fn gauss_legendre(q: usize, cx: &mut FloatContext) -> Vec<(HighPrecFloat, HighPrecFloat)> {
    let w = cx.precision();
    let one = cx.int(1);
    let eps = one.ldexp(8 - w as i64);
    let legendre = |x: &HighPrecFloat, cx: &FloatContext| {
        let mut p0 = cx.int(1);
        let mut p1 = x.clone();
        for k in 1..q {
            let k = k as i64;
            let p2 = &(&(&cx.int(2 * k + 1) * &(x * &p1)) - &(&cx.int(k) * &p0)) / &cx.int(k + 1);
            p0 = p1;
            p1 = p2;
        }
        // (P_q, P'_q)
        let d = &(&cx.int(q as i64) * &(&(x * &p1) - &p0)) / &(&(x * x) - &cx.int(1));
        (p1, d)
    };
    (0..q)
        .map(|i| {
            let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
            let mut x = HighPrecFloat::from_f64(guess, w);
            for _ in 0..100 {
                let (p, d) = legendre(&x, cx);
                let dx = &p / &d;
                x = &x - &dx;
                if dx.abs() <= eps {
                    break;
                }
            }
            let (_, d) = legendre(&x, cx);
            let weight = &cx.int(2) / &(&(&one - &(&x * &x)) * &(&d * &d));
            (x, weight)
        })
        .collect()
}

fn gauss_panels(f: &Integrand, cx: &mut FloatContext, panels: u32) -> HighPrecFloat {
    let rule = gauss_legendre(GL_ORDER, cx);
    let h = cx.rational(&Rational::new(1.into(), (2 * panels as i64).into()));
    let half_h = h.ldexp(-1);
    let mut total = HighPrecFloat::zero(cx.precision());
    for p in 0..panels {
        let mid = &(&h * &cx.int(p as i64)) + &half_h;
        let mut acc = HighPrecFloat::zero(cx.precision());
        for (x, wt) in &rule {
            let t = &mid + &(&half_h * x);
            acc = &acc + &(wt * &f.eval(cx, &t));
        }
        total = &total + &(&acc * &half_h);
    }
    total
}

/// `zeta(2j + 1)` from
/// `(-1)^j 2^{2j} pi^{2j+1} / ((2j)! (2^{2j+1} - 1)) * int_0^{1/2} E_{2j}(x) csc(pi x) dx`.
pub fn zeta_odd_integral(j: u32, cfg: &QuadratureConfig) -> Result<HighPrecFloat, ZetaError> {
    if j == 0 {
        return Err(ZetaError::JZero);
    }
    cfg.validate()?;
    let w = cfg.precision + 16;
    let mut cx = FloatContext::new(w);
    let f = Integrand::new(j, &mut cx);
    let integral = match cfg.method {
        QuadratureMethod::AdaptiveSimpson => {
            let a = cx.int(0);
            let b = cx.rational(&Rational::new(1.into(), 2.into()));
            let tol = HighPrecFloat::from_f64(cfg.abs_tolerance, w);
            adaptive_simpson(&f, &mut cx, &a, &b, &tol, cfg.max_depth)
        }
        QuadratureMethod::GaussLegendrePanels => gauss_panels(&f, &mut cx, cfg.panels),
    };
    let jj = j as i64;
    let sign = if j % 2 == 0 { int(1) } else { int(-1) };
    let scale = sign * pow2(2 * jj) / (Rational::from_integer(factorial(2 * j as u64)) * (pow2(2 * jj + 1) - int(1)));
    let pre = &cx.pi().powi(2 * j as usize + 1) * &cx.rational(&scale);
    Ok((&pre * &integral).with_precision(cfg.precision))
}
