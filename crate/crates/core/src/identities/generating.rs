use num_traits::Zero;

use super::common::{bpoly, bvali, c, epoly, poly_residual, sign, Args};
use super::{CheckReport, IdentityError, IdentityGroup, IdentityId, Params};
use crate::exact::{factorial, int, rat};
use crate::{Rational, RationalPoly};

const MAX: i64 = 12;

fn shift_sum(k: usize, y: &Rational, family: impl Fn(usize) -> RationalPoly) -> RationalPoly {
    let mut acc = RationalPoly::zero();
    let mut ypow = Rational::from_integer(1.into());
    for i in (0..=k).rev() {
        acc = acc + family(i).scale(&(c(k as i64, i as i64) * &ypow));
        ypow *= y;
    }
    acc
}

/// Polynomial identities of the generalized Bernoulli and Euler families.
pub fn check_generating_identity(id: IdentityId, p: &Params) -> Result<CheckReport, IdentityError> {
    if id.group() != IdentityGroup::Generating {
        return Err(IdentityError::UnknownIdentity(id.tag().into()));
    }
    let a = Args::new(id, p);
    let report = match id {
        IdentityId::SumShift => {
            let k = a.get("k", 0, MAX)? as usize;
            let al = a.get("alpha", 0, MAX)? as u32;
            let mut bad = Vec::new();
            for y in [int(-2), int(-1), rat(1, 2), int(1), int(3)] {
                let b = bpoly(k, al);
                if let Some(r) = poly_residual(&b.shift(&y), &shift_sum(k, &y, |i| bpoly(i, al))) {
                    bad.push(format!("B at y={y}: {r}"));
                }
                if let Some(r) = poly_residual(&epoly(k).shift(&y), &shift_sum(k, &y, epoly)) {
                    bad.push(format!("E at y={y}: {r}"));
                }
            }
            a.report((!bad.is_empty()).then(|| bad.join("; ")))
        }
        IdentityId::Reflection => {
            let n = a.get("n", 0, MAX)? as usize;
            let al = a.get("alpha", 0, MAX)?;
            let b = bpoly(n, al as u32);
            let lhs = b.compose(&RationalPoly::new(vec![int(al), int(-1)]));
            a.report(poly_residual(&lhs, &b.scale(&sign(n as i64))))
        }
        IdentityId::OrderDrop => {
            let n = a.get("n", 0, MAX)? as usize;
            let al = a.get("alpha", 1, MAX)? as u32;
            let lower = bpoly(n, al - 1);
            let up = bpoly(n + 1, al);
            let inv = rat(1, n as i64 + 1);
            let diff = (up.shift(&int(1)) - &up).scale(&inv);
            let mut sum = RationalPoly::zero();
            for k in 0..=n {
                sum = sum + bpoly(k, al).scale(&c(n as i64 + 1, k as i64));
            }
            let sum = sum.scale(&inv);
            let r: Vec<String> = [("difference form", poly_residual(&lower, &diff)), ("sum form", poly_residual(&lower, &sum))]
                .into_iter()
                .filter_map(|(l, r)| r.map(|r| format!("{l}: {r}")))
                .collect();
            a.report((!r.is_empty()).then(|| r.join("; ")))
        }
        IdentityId::OddZero => {
            let i = a.get("i", 0, MAX / 2)?;
            let m = a.get("m", 0, MAX)?;
            let v = bpoly(2 * i as usize + 1, m as u32).eval(&rat(m, 2));
            a.report((!v.is_zero()).then(|| v.to_string()))
        }
        IdentityId::AlphaLower => {
            let n = a.get("n", 0, MAX)?;
            let al = a.get("alpha", 0, MAX)?;
            let k = a.get("k", 0, n.min(al))?;
            let lhs = bpoly((n - k) as usize, (al - k) as u32);
            let b = bpoly(n as usize, al as u32);
            let mut s = RationalPoly::zero();
            for i in 0..=k {
                s = s + b.shift(&int(i)).scale(&(sign(k - i) * c(k, i)));
            }
            let fact = |v: i64| Rational::from_integer(factorial(v as u64));
            let disp = poly_residual(&lhs, &s.scale(&(fact(n) / fact(k))));
            a.report_or_variant(disp, "coefficient (n-k)!/n!", || {
                poly_residual(&lhs, &s.scale(&(fact(n - k) / fact(n))))
            })
        }
        IdentityId::BinomSumZero => {
            let m = a.get("m", 2, MAX)?;
            let j = a.get("j", 0, m - 2)?;
            let v: Rational = (0..m).map(|k| c(m - 1, k) * bvali(k, m, j)).sum();
            a.report((!v.is_zero()).then(|| v.to_string()))
        }
        IdentityId::ProdZeros => {
            let m = a.get("m", 1, MAX)?;
            let roots: Vec<Rational> = (1..m).map(int).collect();
            a.report(poly_residual(&bpoly(m as usize - 1, m as u32), &RationalPoly::from_roots(&roots)))
        }
        IdentityId::Dprod => {
            let m = a.get("m", 1, MAX)?;
            let k = a.get("k", 1, m)?;
            let roots: Vec<Rational> = (1..m).map(int).collect();
            let d = RationalPoly::from_roots(&roots).nth_derivative(k as usize - 1);
            let f = Rational::new(factorial((m - k) as u64), factorial(m as u64 - 1));
            a.report(poly_residual(&bpoly((m - k) as usize, m as u32), &d.scale(&f)))
        }
        IdentityId::Deriv => {
            let n = a.get("n", 1, MAX)?;
            let al = a.get("alpha", 0, MAX)? as u32;
            let rhs = bpoly(n as usize, al).derivative().scale(&rat(1, n));
            a.report(poly_residual(&bpoly(n as usize - 1, al), &rhs))
        }
        _ => unreachable!(),
    };
    Ok(report)
}
