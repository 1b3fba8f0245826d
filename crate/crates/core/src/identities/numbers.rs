use num_traits::Zero;

use super::common::{bval, c, epoly, poly_residual, rat_residual, sign, Args};
use super::{CheckReport, IdentityError, IdentityGroup, IdentityId, Params};
use crate::exact::{bernoulli_number, binomial_general, factorial, int, pow2, rat, stirling_first_signed, stirling_second};
use crate::{Rational, RationalPoly, RationalSeries};

/// Identities between binomial, Stirling, Bernoulli and Euler numbers.
pub fn check_number_identity(id: IdentityId, p: &Params) -> Result<CheckReport, IdentityError> {
    if id.group() != IdentityGroup::Number {
        return Err(IdentityError::UnknownIdentity(id.tag().into()));
    }
    let a = Args::new(id, p);
    let fact = |v: i64| Rational::from_integer(factorial(v as u64));
    let report = match id {
        IdentityId::Bidentity => {
            let n = a.get("n", 0, 12)?;
            let r = a.get("r", 0, n)?;
            let k = a.get("k", 0, r)?;
            let lhs = c(n + k, n - r) * c(n + r + 1, n + k + 1);
            let rhs = c(n + k, k) * c(n, r) * c(n + r + 1, r - k) * fact(r) * fact(k) / fact(r + k);
            a.report(rat_residual(&lhs, &rhs))
        }
        IdentityId::StirlingRel => {
            let n = a.get("n", 1, 10)?;
            let k = a.get("k", 1, n)?;
            let mut acc = Rational::zero();
            for j in n..=2 * n - k {
                acc += sign(j - k)
                    * Rational::from_integer(binomial_general(j - 1, k - 1))
                    * c(2 * n - k, j)
                    * stirling_second((j - k) as usize, (j - n) as usize);
            }
            let lhs = stirling_first_signed(n as usize, k as usize);
            a.report(rat_residual(&lhs, &(sign(n - k) * acc)))
        }
        IdentityId::TanBernoulli => {
            let j = a.get("j", 1, 10)?;
            let t = RationalSeries::tan(2 * j as usize);
            let want = sign(j + 1) * pow2(2 * j) * (pow2(2 * j) - int(1)) * bernoulli_number(2 * j as usize) / fact(2 * j);
            let disp = rat_residual(&t.coeff(2 * j as usize), &want);
            a.report_or_variant(disp, "coefficient of t^(2j-1)", || {
                rat_residual(&t.coeff(2 * j as usize - 1), &want)
            })
        }
        IdentityId::SinhGenb => {
            let n = a.get("n", 0, 10)?;
            let x2 = a.get("a", 0, 10)?;
            let s = RationalSeries::sinhc(2 * n as usize).inverse().expect("unit constant term").pow(x2 as u32);
            let rhs = pow2(2 * n) * bval(2 * n, x2, &rat(x2, 2)) / fact(2 * n);
            a.report(rat_residual(&s.coeff(2 * n as usize), &rhs))
        }
        IdentityId::EulerAtZero => {
            let n = a.get("n", 0, 10)?;
            let lhs = epoly(n as usize).eval(&Rational::zero());
            let rhs = rat(2, n + 1) * (int(1) - pow2(n + 1)) * bernoulli_number(n as usize + 1);
            a.report(rat_residual(&lhs, &rhs))
        }
        IdentityId::EulerExplicit => {
            let j = a.get("j", 0, 10)?;
            let mut acc = RationalPoly::zero();
            for k in 0..=j {
                for l in 0..=j {
                    let coef = pow2(-k) * sign(l) * c(k, l);
                    if coef.is_zero() {
                        continue;
                    }
                    let term = RationalPoly::new(vec![int(l), int(1)]).pow(j as u32);
                    acc = acc + term.scale(&coef);
                }
            }
            a.report(poly_residual(&epoly(j as usize), &acc))
        }
        _ => unreachable!(),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::params;

    fn run(id: IdentityId, ps: &[(&str, i64)]) -> CheckReport {
        check_number_identity(id, &params(ps)).unwrap()
    }

    #[test]
    fn spot_checks() {
        assert!(run(IdentityId::Bidentity, &[("n", 5), ("k", 2), ("r", 3)]).is_pass());
        assert!(run(IdentityId::EulerAtZero, &[("n", 3)]).is_pass());
        assert!(run(IdentityId::StirlingRel, &[("n", 6), ("k", 2)]).is_pass());
        assert!(run(IdentityId::SinhGenb, &[("n", 3), ("a", 5)]).is_pass());
        assert!(run(IdentityId::EulerExplicit, &[("j", 7)]).is_pass());
    }

    #[test]
    fn tangent_reads_odd_coefficient() {
        let r = run(IdentityId::TanBernoulli, &[("j", 2)]);
        assert!(r.is_pass());
        assert_eq!(r.variant.as_deref(), Some("coefficient of t^(2j-1)"));
    }
}
