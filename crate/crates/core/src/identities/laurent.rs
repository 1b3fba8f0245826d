use num_traits::Zero;

use super::common::{bvali, c, e_affine, eval_e, laurent_residual, mono, rat_residual, Args};
use super::{CheckReport, IdentityError, IdentityGroup, IdentityId, Params};
use crate::exact::{bernoulli_number, factorial, int, pow2, rat};
use crate::{Rational, RationalLaurent};

/// `x^{-1} E_{i+1}(c x + a) - m E_i(c x + a)`
fn inner(i: i64, m: i64, cc: i64, a: &Rational) -> RationalLaurent {
    let cc = int(cc);
    let hi = RationalLaurent::from_poly(e_affine(i + 1, &cc, a)).times_power(-1);
    let lo = RationalLaurent::from_poly(e_affine(i, &cc, a)).scale(&int(m));
    &hi - &lo
}

/// `C(2m-1, i) B_{2m-1-i}^{(2m)}(m)`
fn coef(m: i64, i: i64) -> Rational {
    c(2 * m - 1, i) * bvali(2 * m - 1 - i, 2 * m, m)
}

/// `sum_{i<2m} x^{-i} C(2m-1, i) B_{2m-1-i}^{(2m)}(m) inner(i, m, j)`
fn prep_left(m: i64, j: i64) -> RationalLaurent {
    let zero = Rational::zero();
    let mut s = RationalLaurent::zero();
    for i in 0..2 * m {
        s = s + &mono(coef(m, i), -i) * &inner(i, m, j, &zero);
    }
    s
}

fn prep_right(m: i64, j: i64) -> RationalLaurent {
    let mut s = RationalLaurent::zero();
    let at = m + j;
    for k in 0..m {
        let v = eval_e(2 * k + 1, &Rational::zero())
            * (c(2 * m - 1, 2 * k) * bvali(2 * m - 2 * k - 1, 2 * m, at)
                + int(j - m) * c(2 * m - 1, 2 * k + 1) * bvali(2 * m - 2 * k - 2, 2 * m, at));
        s = s + mono(v, -2 * k - 1);
    }
    s
}

/// `(j - m) B_{2m-1}^{(2m)}(m + j)`
fn const_term(m: i64, j: i64) -> Rational {
    int(j - m) * bvali(2 * m - 1, 2 * m, m + j)
}

/// Second difference in `j` of the left side of PREPPREP.
fn second_diff(m: i64, j: i64) -> RationalLaurent {
    let zero = Rational::zero();
    let mut s = RationalLaurent::zero();
    for i in 0..2 * m {
        let d = &(&inner(i, m, j - 1, &zero) - &inner(i, m, j, &zero).scale(&int(2))) + &inner(i, m, j + 1, &zero);
        s = s + &mono(coef(m, i), -i) * &d;
    }
    s
}

fn middle_prep_right(m: i64, j: i64) -> RationalLaurent {
    let mut s = RationalLaurent::zero();
    for k in 0..m - 1 {
        let v = c(2 * m - 1, 2 * k + 1)
            * eval_e(2 * k + 1, &Rational::zero())
            * int(2 * m - 2 * k - 2)
            * (int(1 + 2 * k) * bvali(2 * m - 2 * k - 3, 2 * m - 2, m + j - 1)
                + int((j - m) * (2 * m - 2 * k - 3)) * bvali(2 * m - 2 * k - 4, 2 * m - 2, m + j - 1)
                + bvali(2 * m - 2 * k - 3, 2 * m - 1, m + j)
                + bvali(2 * m - 2 * k - 3, 2 * m - 1, m + j - 1));
        s = s + mono(v, -2 * k - 1);
    }
    s
}

fn middle_right(m: i64, j: i64, order: i64) -> RationalLaurent {
    let zero = Rational::zero();
    let f = int(2 * m * (2 * m - 1));
    let mut s = RationalLaurent::zero();
    for i in 0..2 * m - 2 {
        let cf = &f * c(2 * m - 3, i) * bvali(2 * m - 3 - i, 2 * m - 2, m - 1);
        s = s + &mono(cf, -i) * &inner(i, order, j, &zero);
    }
    s
}

/// `sum_j 2^{2jn}(2^{2j}-1)/2^{2j} C(2m,2j) B_{2m-2j}^{(2m)}(m) B(2j)` for `j = 1..=m`.
fn bernoulli_side(m: i64, n: i64) -> Rational {
    (1..=m)
        .map(|j| {
            pow2(2 * j * n - 2 * j)
                * (pow2(2 * j) - int(1))
                * c(2 * m, 2 * j)
                * bvali(2 * m - 2 * j, 2 * m, m)
                * bernoulli_number(2 * j as usize)
        })
        .sum()
}

/// `sum_k x^{2k+1} C(2m-1,2k) B_{2k}^{(2m)}(m) (E_{2m-2k}(y)/x - m E_{2m-2k-1}(y))`
fn euler_side(m: i64, x: &Rational, y: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = x.clone();
    for k in 0..m {
        let t = eval_e(2 * m - 2 * k, y) / x - int(m) * eval_e(2 * m - 2 * k - 1, y);
        acc += &xp * c(2 * m - 1, 2 * k) * bvali(2 * k, 2 * m, m) * t;
        xp = &xp * x * x;
    }
    acc
}

fn fact(v: i64) -> Rational {
    Rational::from_integer(factorial(v as u64))
}

/// Laurent polynomial identities in the formal variable `x`, and the two
/// dyadic specializations at `x = 2^{1-n}`.
pub fn check_laurent_lemma(id: IdentityId, p: &Params) -> Result<CheckReport, IdentityError> {
    if id.group() != IdentityGroup::Laurent {
        return Err(IdentityError::UnknownIdentity(id.tag().into()));
    }
    let a = Args::new(id, p);
    let zero = Rational::zero();
    let report = match id {
        IdentityId::Prepprep => {
            let m = a.get("m", 1, 8)?;
            let j = a.get("j", -8, 8)?;
            let lhs = prep_left(m, j);
            let rhs = prep_right(m, j);
            let disp = laurent_residual(&lhs, &rhs, m);
            a.report_or_variant(disp, "constant term (j-m) B_{2m-1}^{(2m)}(m+j) added", || {
                laurent_residual(&lhs, &(rhs.clone() + mono(const_term(m, j), 0)), m)
            })
        }
        IdentityId::Middletermprep => {
            let m = a.get("m", 1, 8)?;
            let j = a.get("j", -8, 8)?;
            let lhs = second_diff(m, j);
            let rhs = middle_prep_right(m, j);
            let disp = laurent_residual(&lhs, &rhs, m);
            a.report_or_variant(disp, "second difference of the constant term added", || {
                let cst = const_term(m, j - 1) - int(2) * const_term(m, j) + const_term(m, j + 1);
                laurent_residual(&lhs, &(rhs.clone() + mono(cst, 0)), m)
            })
        }
        IdentityId::Middleterm => {
            let m = a.get("m", 1, 8)?;
            let j = a.get("j", -8, 8)?;
            let lhs = second_diff(m, j);
            let disp = laurent_residual(&lhs, &middle_right(m, j, m), m);
            a.report_or_variant(disp, "inner terms at order m-1", || {
                laurent_residual(&lhs, &middle_right(m, j, m - 1), m)
            })
        }
        IdentityId::Firstterm => {
            let m = a.get("m", 1, 8)?;
            let mut l = RationalLaurent::zero();
            let mut r = RationalLaurent::zero();
            for i in 0..2 * m {
                let cf = coef(m, i);
                l = l + &mono(cf.clone(), 2 * m - i - 1) * &inner(i, m, 1, &zero);
                r = r + mono(int(m) * cf * eval_e(i, &zero), 2 * m - i - 1);
            }
            a.report(laurent_residual(&l, &r, m))
        }
        IdentityId::Lastterm => {
            let m = a.get("m", 1, 8)?;
            let half = rat(1, 2);
            let mut l = RationalLaurent::zero();
            let mut r = RationalLaurent::zero();
            for i in 0..2 * m {
                let cf = coef(m, i);
                l = l + mono(&cf * eval_e(i + 1, &half), 2 * m - i - 1)
                    - mono(int(m) * &cf * eval_e(i, &half), 2 * m - i);
                r = r + &mono(cf, 2 * m - i) * &inner(i, m, 1, &half);
            }
            a.report(laurent_residual(&l, &r, m))
        }
        IdentityId::Oddeven => {
            let m = a.get("m", 1, 8)?;
            let mut l = RationalLaurent::zero();
            for j in 1..=m {
                let v = (pow2(2 * j) - int(1))
                    * c(2 * m, 2 * j)
                    * bvali(2 * m - 2 * j, 2 * m, m)
                    * bernoulli_number(2 * j as usize);
                l = l + mono(v, -(2 * j - 1));
            }
            let mut r = RationalLaurent::zero();
            for k in 0..m {
                let cf = -c(2 * m - 1, 2 * k) * bvali(2 * k, 2 * m, m);
                r = r + &mono(cf, 2 * k + 1 - 2 * m) * &inner(2 * m - 2 * k - 1, m, 1, &zero);
            }
            a.report(laurent_residual(&l, &r, m))
        }
        IdentityId::Lastprop => {
            let m = a.get("m", 1, 8)?;
            let n = a.get("n", 2, 8)?;
            let x = pow2(1 - n);
            let lhs = -pow2(2 * m - 1) / (pow2(n - 2) * fact(2 * m)) * bernoulli_side(m, n);
            let e = euler_side(m, &x, &x) / fact(2 * m);
            let disp = rat_residual(&lhs, &(pow2(m * n) * &e));
            a.report_or_variant(disp, "power 2^(2mn)", || rat_residual(&lhs, &(pow2(2 * m * n) * &e)))
        }
        IdentityId::BridgeEvenOdd => {
            let m = a.get("m", 1, 8)?;
            let n = a.get("n", 2, 8)?;
            let x = pow2(1 - n);
            let lhs = pow2(2 * m + 1) / fact(2 * m + 2) * bernoulli_side(m + 1, n);
            let total: Rational = (1..=1i64 << (n - 2)).map(|jj| euler_side(m, &x, &(&x * int(jj)))).sum();
            let e = pow2(n - 1) * total / fact(2 * m);
            let disp = rat_residual(&lhs, &(pow2(m * n) * &e));
            a.report_or_variant(disp, "power 2^(2mn)", || rat_residual(&lhs, &(pow2(2 * m * n) * &e)))
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
        check_laurent_lemma(id, &params(ps)).unwrap()
    }

    #[test]
    fn oddeven_m1_is_half_over_x() {
        let l = {
            let v = int(3) * bernoulli_number(2);
            mono(v, -1)
        };
        assert_eq!(l, mono(rat(1, 2), -1));
        assert!(run(IdentityId::Oddeven, &[("m", 1)]).is_pass());
    }

    #[test]
    fn spot_checks() {
        assert!(run(IdentityId::Firstterm, &[("m", 2)]).is_pass());
        assert!(run(IdentityId::Lastterm, &[("m", 3)]).is_pass());
        assert!(run(IdentityId::Lastprop, &[("m", 2), ("n", 4)]).is_pass());
        assert!(run(IdentityId::BridgeEvenOdd, &[("m", 2), ("n", 4)]).is_pass());
        for j in 0..=8 {
            assert!(run(IdentityId::Prepprep, &[("m", 3), ("j", j)]).is_pass());
            assert!(run(IdentityId::Middletermprep, &[("m", 3), ("j", j)]).is_pass());
            assert!(run(IdentityId::Middleterm, &[("m", 3), ("j", j)]).is_pass());
        }
    }

    #[test]
    fn middleterm_m1_fails() {
        assert!(run(IdentityId::Middleterm, &[("m", 1), ("j", 2)]).is_fail());
    }
}
