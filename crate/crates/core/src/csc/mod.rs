//! Dyadic cosecant power sums, their closed forms and transfer matrices.

mod rows;
mod sums;
mod trig;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::serde_rationals;
use crate::numeric::{FloatContext, HighPrecFloat};
use crate::Rational;

pub use rows::{
    even_matrix_full, even_row, matrix_first_row, matrix_first_row_closed, matrix_first_row_with,
    matrix_full, odd_coeff_row, odd_coeff_row_alt, step_down, RecursionScaling,
};
pub use sums::{direct_sum, even_sum_exact, even_sum_exact_binomial, even_sum_exact_bernoulli};
pub use trig::{check_trig_lemma, TrigLemma};

/// Smallest precision accepted by the numeric oracle.
pub const MIN_PRECISION: usize = 64;
/// Largest level summed term by term.
pub const MAX_DIRECT_LEVEL: u32 = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CscError {
    #[error("precision {0} bits is below the minimum of {MIN_PRECISION}")]
    PrecisionTooLow(usize),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("parameter {name} = {value} out of range ({range})")]
    ParamOutOfRange { name: &'static str, value: i64, range: &'static str },
}

impl CscError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::PrecisionTooLow(_) => "PRECISION_TOO_LOW",
            Self::InvalidQuery(_) => "INVALID_QUERY",
            Self::ParamOutOfRange { .. } => "PARAM_OUT_OF_RANGE",
        }
    }
}

/// `S(s, n)` for a positive exponent `s` and level `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumQuery {
    s: u32,
    n: u32,
}

impl SumQuery {
    pub fn new(s: u32, n: u32) -> Result<Self, CscError> {
        if s == 0 {
            return Err(CscError::InvalidQuery("exponent s must be positive".into()));
        }
        if n < 2 {
            return Err(CscError::InvalidQuery(format!("level n = {n} must be at least 2")));
        }
        if n > MAX_DIRECT_LEVEL {
            return Err(CscError::InvalidQuery(format!(
                "level n = {n} exceeds {MAX_DIRECT_LEVEL} for direct summation"
            )));
        }
        Ok(Self { s, n })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of summands, `2^{n-2}`.
    pub fn terms(&self) -> u64 {
        1 << (self.n - 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SineBasis {
    /// `sin((2k - 1) pi / 2^n)`
    OddSine,
    /// `sin(k pi / 2^{n-1})`
    HalfSine,
}

impl SineBasis {
    /// Angle of basis element `k` (1-based) as a multiple of `pi`.
    pub fn angle(&self, n: u32, k: usize) -> Rational {
        let k = k as i64;
        match self {
            Self::OddSine => Rational::new((2 * k - 1).into(), (1i64 << n).into()),
            Self::HalfSine => Rational::new(k.into(), (1i64 << (n - 1)).into()),
        }
    }
}

impl fmt::Display for SineBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::OddSine => "ODD_SINE",
            Self::HalfSine => "HALF_SINE",
        })
    }
}

/// Exact expansion coefficients of a power of a cosecant over a sine basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: u32,
    pub power: u32,
    pub basis: SineBasis,
    #[serde(with = "serde_rationals")]
    pub entries: Vec<Rational>,
}

impl CoefficientRow {
    pub fn new(n: u32, power: u32, basis: SineBasis, entries: Vec<Rational>) -> Self {
        Self { n, power, basis, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `k`, 1-based.
    pub fn entry(&self, k: usize) -> &Rational {
        &self.entries[k - 1]
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { entries: self.entries.iter().map(|e| e * c).collect(), ..self.clone() }
    }

    /// `sum_k entries_k * basis_k`.
    pub fn dot_basis(&self, cx: &mut FloatContext) -> HighPrecFloat {
        let mut acc = HighPrecFloat::zero(cx.precision());
        for (k, e) in self.entries.iter().enumerate() {
            let s = cx.sin_pi(&self.basis.angle(self.n, k + 1));
            acc = &acc + &(&s * &cx.rational(e));
        }
        acc
    }

    /// `sum_k entries_k * csc((2k - 1) pi / 2^n)`.
    pub fn dot_csc(&self, cx: &mut FloatContext) -> HighPrecFloat {
        let mut acc = HighPrecFloat::zero(cx.precision());
        for (k, e) in self.entries.iter().enumerate() {
            let s = cx.sin_pi(&SineBasis::OddSine.angle(self.n, k + 1)).recip();
            acc = &acc + &(&s * &cx.rational(e));
        }
        acc
    }
}

impl fmt::Display for CoefficientRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", es.join(", "))
    }
}

/// All rows of a transfer matrix; row `j` expands the power of `csc` at the
/// `j`-th odd angle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferMatrix {
    pub n: u32,
    pub power: u32,
    pub rows: Vec<CoefficientRow>,
}

impl TransferMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(j, k)`, both 1-based.
    pub fn entry(&self, j: usize, k: usize) -> &Rational {
        self.rows[j - 1].entry(k)
    }

    pub fn row(&self, j: usize) -> &CoefficientRow {
        &self.rows[j - 1]
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.entries.clone()).collect()
    }

    /// Is every row a signed permutation of row 1?
    pub fn rows_are_signed_permutations(&self) -> bool {
        let key = |r: &CoefficientRow| {
            let mut v: Vec<Rational> = r.entries.iter().map(|e| if e < &Rational::default() { -e } else { e.clone() }).collect();
            v.sort();
            v
        };
        let first = key(&self.rows[0]);
        self.rows.iter().all(|r| key(r) == first)
    }

    /// Column sums, exactly.
    pub fn column_sums(&self) -> Vec<Rational> {
        let mut sums = vec![Rational::default(); self.size()];
        for r in &self.rows {
            for (s, e) in sums.iter_mut().zip(&r.entries) {
                *s += e;
            }
        }
        sums
    }
}

/// Dense rational matrix product.
pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|k| row.iter().zip(b).fold(Rational::default(), |acc, (x, br)| acc + x * &br[k]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).map(|k| a.iter().map(|r| r[k].clone()).collect()).collect()
}
