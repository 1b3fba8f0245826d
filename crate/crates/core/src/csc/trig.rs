use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::rows::{even_matrix_full, matrix_first_row, step_down};
use super::sums::direct_sum;
use super::{CscError, SumQuery};
use crate::exact::pow2;
use crate::identities::{params, CheckReport, CheckStatus, Params};
use crate::numeric::{rel_diff, FloatContext, HighPrecFloat};
use crate::Rational;

/// Trigonometric lemmas behind the matrix recursions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TrigLemma {
    Quotient,
    QuotientCor,
    Product,
    ProductCor,
    ColumnSums,
    Commute,
}

impl TrigLemma {
    pub const ALL: [TrigLemma; 6] = [
        Self::Quotient,
        Self::QuotientCor,
        Self::Product,
        Self::ProductCor,
        Self::ColumnSums,
        Self::Commute,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Self::Quotient => "QUOTIENT",
            Self::QuotientCor => "QUOTIENT_COR",
            Self::Product => "PRODUCT",
            Self::ProductCor => "PRODUCT_COR",
            Self::ColumnSums => "COLUMN_SUMS",
            Self::Commute => "COMMUTE",
        }
    }

    /// Parameter sets checked by a full sweep with `n <= max_n`, `m <= max_m`.
    pub fn default_sweep(&self, max_m: i64, max_n: i64) -> Vec<Params> {
        let mut out = Vec::new();
        for n in 2..=max_n.min(8) {
            match self {
                Self::Quotient | Self::Product => out.push(params(&[("n", n)])),
                Self::ProductCor => out.extend((1..=max_m.min(4)).map(|m| params(&[("m", m), ("n", n)]))),
                _ => out.extend((0..=max_m.min(4)).map(|m| params(&[("m", m), ("n", n)]))),
            }
        }
        out
    }
}

impl fmt::Display for TrigLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TrigLemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|l| l.tag() == s).ok_or_else(|| s.to_string())
    }
}

/// `sin(k pi / 2^n)` for every integer `k`.
struct SinTable {
    n: u32,
    values: Vec<HighPrecFloat>,
}

impl SinTable {
    fn new(n: u32, cx: &mut FloatContext) -> Self {
        let pi = cx.pi();
        let quarter = 1usize << (n - 1);
        let values = (0..=quarter)
            .map(|k| {
                let t = (&pi * &cx.int(k as i64)).ldexp(-(n as i64));
                cx.sin(&t)
            })
            .collect();
        Self { n, values }
    }

    fn get(&self, k: i64) -> HighPrecFloat {
        let full = 1i64 << self.n;
        let mut b = k.rem_euclid(2 * full);
        let neg = b > full;
        if neg {
            b -= full;
        }
        if b > full / 2 {
            b = full - b;
        }
        let v = self.values[b as usize].clone();
        if neg {
            -v
        } else {
            v
        }
    }
}

struct Residual {
    max: Option<HighPrecFloat>,
}

impl Residual {
    fn new() -> Self {
        Self { max: None }
    }

    fn push(&mut self, lhs: &HighPrecFloat, rhs: &HighPrecFloat) {
        let d = rel_diff(lhs, rhs);
        if self.max.as_ref().is_none_or(|m| &d > m) {
            self.max = Some(d);
        }
    }

    fn within(&self, tol: &HighPrecFloat) -> bool {
        self.max.as_ref().is_none_or(|m| m <= tol)
    }

    fn text(&self) -> Option<String> {
        self.max.as_ref().map(|m| m.to_sci_string(6))
    }
}

fn get(p: &Params, name: &'static str, default: i64) -> i64 {
    p.get(name).copied().unwrap_or(default)
}

fn range(name: &'static str, value: i64, ok: bool, range: &'static str) -> Result<(), CscError> {
    if ok {
        Ok(())
    } else {
        Err(CscError::ParamOutOfRange { name, value, range })
    }
}

fn weighted(cx: &FloatContext, a: &[Rational], table: &SinTable) -> HighPrecFloat {
    let mut acc = HighPrecFloat::zero(cx.precision());
    for (i, c) in a.iter().enumerate() {
        acc = &acc + &(&cx.rational(c) * &table.get(2 * i as i64 + 1));
    }
    acc
}

/// Check one trigonometric lemma at level `n`.
///
/// Numeric comparisons pass when the largest relative residual is at most
/// `2^{40 - precision}`; `COLUMN_SUMS` is exact. `j` (where used) defaults to
/// every index, `m` defaults to 1.
pub fn check_trig_lemma(id: TrigLemma, n: u32, p: &Params, precision: usize) -> Result<CheckReport, CscError> {
    range("n", n as i64, (2..=12).contains(&n), "2..=12")?;
    range("precision", precision as i64, precision >= 128, ">= 128")?;
    let size = 1i64 << (n - 2);
    let m = get(p, "m", 1);
    let js: Vec<i64> = match p.get("j") {
        Some(&j) => {
            range("j", j, (1..=size).contains(&j), "1..=2^(n-2)")?;
            vec![j]
        }
        None => (1..=size).collect(),
    };
    let min_m = if id == TrigLemma::ProductCor { 1 } else { 0 };
    if !matches!(id, TrigLemma::Quotient | TrigLemma::Product) {
        range("m", m, (min_m..=12).contains(&m), "m within 0..=12 (1..=12 for PRODUCT_COR)")?;
    }

    let mut shown = p.clone();
    shown.insert("n".into(), n as i64);
    if matches!(id, TrigLemma::Quotient | TrigLemma::Product) {
        shown.remove("m");
    } else {
        shown.insert("m".into(), m);
    }

    if id == TrigLemma::ColumnSums {
        let sums = even_matrix_full(m as u32, n).column_sums();
        let bad: Vec<String> = sums[..sums.len() - 1]
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(k, s)| format!("column {}: {s}", k + 1))
            .collect();
        let residual = (!bad.is_empty()).then(|| bad.join("; "));
        return Ok(CheckReport::from_residual(id.tag(), shown, residual));
    }

    let w = precision + 16;
    let mut cx = FloatContext::new(w);
    let table = SinTable::new(n, &mut cx);
    let full = 1i64 << n;
    let s1 = table.get(1);
    let s1sq = &s1 * &s1;
    let mut res = Residual::new();
    let mut exact_ok = true;

    match id {
        TrigLemma::Quotient => {
            for &j in &js {
                let lhs = &table.get(2 * j - 1) / &s1sq;
                let mut rhs = HighPrecFloat::zero(w);
                for i in 1..=full / 2 {
                    rhs = &rhs + &(&cx.int(i) * &table.get(2 * j - (full - 2 * i + 1)));
                }
                for i in 1..full / 2 {
                    rhs = &rhs + &(&cx.int(i) * &table.get(2 * j + (full - 2 * i - 1)));
                }
                res.push(&lhs, &rhs);
            }
        }
        TrigLemma::Product => {
            for &j in &js {
                let lhs = &table.get(2 * j - 1) * &s1sq;
                let inner = &(&(&cx.int(2) * &table.get(2 * j - 1)) - &table.get(2 * j - 3)) - &table.get(2 * j + 1);
                res.push(&lhs, &inner.ldexp(-2));
            }
        }
        TrigLemma::QuotientCor => {
            let a = matrix_first_row(m as u32, n).entries;
            let lhs = &weighted(&cx, &a, &table) / &s1sq;
            let total: Rational = a.iter().sum();
            let mut head = Rational::zero();
            let mut tail = total;
            let b: Vec<Rational> = (1..=a.len())
                .map(|j| {
                    let odd = Rational::from_integer((2 * j as i64 - 1).into());
                    head += &odd * &a[j - 1];
                    tail -= &a[j - 1];
                    (&head + &odd * &tail) * Rational::from_integer(2.into())
                })
                .collect();
            res.push(&lhs, &weighted(&cx, &b, &table));
        }
        TrigLemma::ProductCor => {
            let row = matrix_first_row(m as u32, n);
            let lower = step_down(&row);
            exact_ok = lower == matrix_first_row(m as u32 - 1, n);
            let lhs = &weighted(&cx, &row.entries, &table) * &s1sq;
            let rhs = weighted(&cx, &lower.entries, &table).ldexp(-2);
            res.push(&lhs, &rhs);
        }
        TrigLemma::Commute => {
            let q = SumQuery::new(2 * m as u32 + 1, n)?;
            let lhs = direct_sum(q, w)?;
            let row = matrix_first_row(m as u32, n).scaled(&pow2(2 * m));
            let mut rhs = HighPrecFloat::zero(w);
            for (i, c) in row.entries.iter().enumerate() {
                rhs = &rhs + &(&cx.rational(c) / &table.get(2 * i as i64 + 1));
            }
            res.push(&lhs, &rhs);
        }
        TrigLemma::ColumnSums => unreachable!(),
    }

    let tol = HighPrecFloat::one(w).ldexp(40 - precision as i64);
    let status = if exact_ok && res.within(&tol) { CheckStatus::Pass } else { CheckStatus::Fail };
    let mut residual = res.text();
    if !exact_ok {
        residual = Some(format!("downward step mismatch; numeric {}", residual.unwrap_or_default()));
    }
    Ok(CheckReport { identity: id.tag().into(), params: shown, status, residual, variant: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemmas_pass() {
        for id in TrigLemma::ALL {
            for n in 2..=6 {
                let r = check_trig_lemma(id, n, &params(&[("m", 2)]), 256).unwrap();
                assert!(r.is_pass(), "{r}");
            }
        }
        let r = check_trig_lemma(TrigLemma::Product, 4, &params(&[("j", 2)]), 256).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn ranges() {
        assert!(check_trig_lemma(TrigLemma::Product, 13, &Params::new(), 256).is_err());
        assert!(check_trig_lemma(TrigLemma::Product, 4, &Params::new(), 64).is_err());
        assert!(check_trig_lemma(TrigLemma::ProductCor, 4, &params(&[("m", 0)]), 256).is_err());
    }
}
