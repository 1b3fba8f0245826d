use num_traits::Zero;

use super::common::{bpoly, bvali, c, poly_residual, Args};
use super::{CheckReport, IdentityError, IdentityGroup, IdentityId, Params};
use crate::exact::{int, stirling_first_signed};
use crate::{Rational, RationalPoly};

/// `C(2i, 2k) - m C(2i - 1, 2k)`
fn weight(m: i64, i: i64, k: i64) -> Rational {
    c(2 * i, 2 * k) - int(m) * c(2 * i - 1, 2 * k)
}

/// `p(x) = sum_{i>k} C(2m-1, 2i-1) (C(2i,2k) - m C(2i-1,2k)) B_{2m-2i}^{(2m)}(x)`
fn p_bernoulli(m: i64, k: i64) -> RationalPoly {
    let mut p = RationalPoly::zero();
    for i in k + 1..=m {
        p = p + bpoly((2 * m - 2 * i) as usize, 2 * m as u32).scale(&(c(2 * m - 1, 2 * i - 1) * weight(m, i, k)));
    }
    p
}

/// The same polynomial with the Bernoulli polynomials expanded in Stirling
/// numbers of the first kind.
fn p_stirling(m: i64, k: i64) -> RationalPoly {
    let mut p = RationalPoly::zero();
    for i in k + 1..=m {
        for r in 2 * i - 1..2 * m {
            let coef = c(r, 2 * i - 1) * weight(m, i, k) * stirling_first_signed(2 * m as usize, r as usize + 1);
            p = p + RationalPoly::monomial(coef, (r - 2 * i + 1) as usize);
        }
    }
    p
}

fn zero_residual(v: Rational) -> Option<String> {
    (!v.is_zero()).then(|| v.to_string())
}

/// Linear relations among centered generalized Bernoulli values.
pub fn check_reduction_lemma(id: IdentityId, p: &Params) -> Result<CheckReport, IdentityError> {
    if id.group() != IdentityGroup::Reduction {
        return Err(IdentityError::UnknownIdentity(id.tag().into()));
    }
    let a = Args::new(id, p);
    let report = match id {
        IdentityId::Reduced1 => {
            let m = a.get("m", 1, 10)?;
            let j = a.get("j", 0, 10)?;
            let v = int(2 * (m - j - 1)) * bvali(2 * j + 1, 2 * m - 1, m)
                - int((m - 1) * (2 * j + 1)) * bvali(2 * j, 2 * m - 1, m);
            a.report(zero_residual(v))
        }
        IdentityId::Reduced2 => {
            let m = a.get("m", 1, 10)?;
            let j = a.get("j", 0, 10)?;
            let v = int(2 * m - 2 * j - 1) * bvali(2 * j, 2 * m - 1, m)
                - int(2 * m - 1) * bvali(2 * j, 2 * m, m)
                - int(2 * j * (m - 1)) * bvali(2 * j - 1, 2 * m - 1, m);
            a.report(zero_residual(v))
        }
        IdentityId::Reduced3 => {
            let m = a.get("m", 0, 10)?;
            let j = a.get("j", 0, 10)?;
            let k = a.get("k", -10, 10)?;
            let x = m + k;
            let v = int(2 * m - 2 * j - 1) * bvali(2 * j + 1, 2 * m, x)
                - int(2 * m) * bvali(2 * j + 1, 2 * m + 1, x)
                - int((m - k) * (2 * j + 1)) * bvali(2 * j, 2 * m, x);
            a.report(zero_residual(v))
        }
        IdentityId::Coeffx => {
            let m = a.get("m", 1, 10)?;
            let k = a.get("k", 0, m - 1)?;
            a.report(zero_residual(p_bernoulli(m, k).eval(&int(m))))
        }
        IdentityId::Stir => {
            let m = a.get("m", 1, 10)?;
            let k = a.get("k", 0, m - 1)?;
            a.report(zero_residual(p_stirling(m, k).eval(&int(m))))
        }
        IdentityId::XmSquared => {
            let m = a.get("m", 1, 10)?;
            let k = a.get("k", 0, m - 1)?;
            let p = p_bernoulli(m, k);
            let sq = RationalPoly::from_roots(&[int(m), int(m)]);
            let (_, rem) = p.div_rem(&sq);
            let mut bad = Vec::new();
            if !rem.is_zero() {
                bad.push(format!("remainder mod (x-{m})^2: {rem}"));
            }
            if let Some(r) = poly_residual(&p, &p_stirling(m, k)) {
                bad.push(format!("Stirling form differs: {r}"));
            }
            a.report((!bad.is_empty()).then(|| bad.join("; ")))
        }
        _ => unreachable!(),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::params;

    fn pass(id: IdentityId, ps: &[(&str, i64)]) -> bool {
        check_reduction_lemma(id, &params(ps)).unwrap().is_pass()
    }

    #[test]
    fn spot_checks() {
        assert!(pass(IdentityId::Reduced1, &[("m", 3), ("j", 1)]));
        assert!(pass(IdentityId::Reduced2, &[("m", 4), ("j", 0)]));
        assert!(pass(IdentityId::Reduced3, &[("m", 3), ("j", 2), ("k", -2)]));
        assert!(pass(IdentityId::Coeffx, &[("m", 3), ("k", 1)]));
        assert!(pass(IdentityId::Stir, &[("m", 4), ("k", 2)]));
        assert!(pass(IdentityId::XmSquared, &[("m", 2), ("k", 0)]));
    }
}
