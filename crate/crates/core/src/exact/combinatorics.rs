use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{int, pow2, rat};
use crate::poly::euler_poly;
use crate::Rational;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `x (x - 1) ... (x - k + 1)` at an integer `x`.
pub fn falling_factorial(x: i64, k: u64) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * (x - i))
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial_general(n as i64, k))
}

/// `C(x, k) = x (x-1) ... (x-k+1) / k!` for any integer `x`; zero for `k < 0`.
pub fn binomial_general(x: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if x >= 0 && k > x {
        return BigInt::zero();
    }
    let k = if x >= 0 { k.min(x - k) } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (x - i) / (i + 1);
    }
    acc
}

fn triangle(n: usize, step: impl Fn(&[BigInt], usize, usize) -> BigInt) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            *slot = step(&row, m, k);
        }
        row = next;
    }
    row
}

fn at(row: &[BigInt], k: usize) -> BigInt {
    row.get(k).cloned().unwrap_or_default()
}

fn stirling_first_row(n: usize) -> Vec<BigInt> {
    // s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k)
    triangle(n, |prev, m, k| {
        let left = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
        left - at(prev, k) * (m - 1)
    })
}

fn stirling_second_row(n: usize) -> Vec<BigInt> {
    // S(m, k) = k S(m-1, k) + S(m-1, k-1)
    triangle(n, |prev, _, k| {
        let left = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
        at(prev, k) * k + left
    })
}

/// Signed Stirling number of the first kind `s(n, k)`.
pub fn stirling_first_signed(n: usize, k: usize) -> Rational {
    Rational::from_integer(at(&stirling_first_row(n), k))
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling_second(n: usize, k: usize) -> Rational {
    Rational::from_integer(at(&stirling_second_row(n), k))
}

fn bernoulli_double_sum(m: u64) -> Rational {
    // B(m) = sum_{k=0}^m 1/(k+1) sum_{j=0}^k (-1)^j C(k,j) j^m, with 0^0 = 1
    let powers: Vec<BigInt> = (0..=m)
        .map(|j| num_traits::pow(BigInt::from(j), m as usize))
        .collect();
    let mut total = Rational::zero();
    let mut row = vec![BigInt::one()];
    for k in 0..=m as usize {
        if k > 0 {
            let mut next = vec![BigInt::one(); k + 1];
            for j in 1..k {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        let mut inner = BigInt::zero();
        for (j, c) in row.iter().enumerate() {
            let term = c * &powers[j];
            if j % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational::new(inner, BigInt::from(k + 1));
    }
    total
}

/// `B(0..=m)` from `sum_{j<n} C(n, j) B(j) = 0`, `B(0) = 1`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(int(1));
    for n in 1..=m {
        if n > 1 && n % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        let mut c = BigInt::one();
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * Rational::from_integer(c.clone());
            }
            c = c * (n + 1 - j) / (j + 1);
        }
        b.push(-acc / int(n as i64 + 1));
    }
    b
}

pub fn bernoulli_by_recurrence(m: usize) -> Rational {
    bernoulli_numbers(m).pop().unwrap_or_else(|| int(1))
}

/// Bernoulli number `B(m)` with `B(1) = -1/2`.
///
/// Evaluated by the explicit double sum and checked against the recurrence.
pub fn bernoulli_number(m: usize) -> Rational {
    let b = bernoulli_double_sum(m as u64);
    let r = bernoulli_by_recurrence(m);
    assert_eq!(b, r, "Bernoulli paths disagree at m = {m}");
    b
}

/// Euler number `E(k) = 2^k E_k(1/2)`.
pub fn euler_number(k: usize) -> Rational {
    pow2(k as i64) * euler_poly::<Rational>(k).eval(&rat(1, 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Binomial,
    StirlingFirstSigned,
    StirlingSecond,
    Bernoulli,
    EulerNumber,
}

impl TableKind {
    fn is_triangular(self) -> bool {
        matches!(self, Self::Binomial | Self::StirlingFirstSigned | Self::StirlingSecond)
    }
}

/// Memoized table of one number family, grown on demand.
///
/// Rows are only ever appended, so a value once returned never changes.
/// Growth takes a write lock; lookups into the computed part share a read lock.
#[derive(Debug)]
pub struct CombinatorialTable {
    kind: TableKind,
    rows: RwLock<Vec<Vec<Rational>>>,
}

impl CombinatorialTable {
    pub fn new(kind: TableKind) -> Self {
        Self { kind, rows: RwLock::new(Vec::new()) }
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    /// Largest computed row index, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.rows.read().unwrap().len().checked_sub(1)
    }

    /// Entry `(n, k)`; for the one-dimensional families `k` is ignored.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.ensure(n);
        let rows = self.rows.read().unwrap();
        if self.kind.is_triangular() {
            rows[n].get(k).cloned().unwrap_or_default()
        } else {
            rows[n][0].clone()
        }
    }

    pub fn value(&self, n: usize) -> Rational {
        self.get(n, 0)
    }

    pub fn row(&self, n: usize) -> Vec<Rational> {
        self.ensure(n);
        self.rows.read().unwrap()[n].clone()
    }

    fn ensure(&self, n: usize) {
        if self.rows.read().unwrap().len() > n {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let m = rows.len();
            let next = self.next_row(&rows, m);
            rows.push(next);
        }
    }

    fn next_row(&self, rows: &[Vec<Rational>], m: usize) -> Vec<Rational> {
        let one = || vec![int(1)];
        if m == 0 {
            return one();
        }
        let prev = &rows[m - 1];
        let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
        match self.kind {
            TableKind::Binomial => (0..=m)
                .map(|k| if k == 0 || k == m { int(1) } else { get(k - 1) + get(k) })
                .collect(),
            TableKind::StirlingFirstSigned => (0..=m)
                .map(|k| {
                    let left = if k == 0 { Rational::zero() } else { get(k - 1) };
                    left - get(k) * int(m as i64 - 1)
                })
                .collect(),
            TableKind::StirlingSecond => (0..=m)
                .map(|k| {
                    let left = if k == 0 { Rational::zero() } else { get(k - 1) };
                    get(k) * int(k as i64) + left
                })
                .collect(),
            TableKind::Bernoulli => {
                if m > 1 && m % 2 == 1 {
                    return vec![Rational::zero()];
                }
                let mut c = BigInt::one();
                let mut acc = Rational::zero();
                for (j, row) in rows.iter().enumerate() {
                    acc += &row[0] * Rational::from_integer(c.clone());
                    c = c * (m + 1 - j) / (j + 1);
                }
                vec![-acc / int(m as i64 + 1)]
            }
            TableKind::EulerNumber => {
                if m % 2 == 1 {
                    return vec![Rational::zero()];
                }
                // sum_{k even} C(m, k) E(k) = 0 for even m >= 2
                let mut acc = Rational::zero();
                for k in (0..m).step_by(2) {
                    acc += &rows[k][0] * binomial(m as u64, k as i64);
                }
                vec![-acc]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(7, 0), int(1));
        assert_eq!(binomial(4, 7), int(0));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial_general(-1, 0), BigInt::one());
        assert_eq!(binomial_general(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_general(-2, 2), BigInt::from(3));
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_first_signed(3, 1), int(2));
        assert_eq!(stirling_first_signed(4, 2), int(11));
        assert_eq!(stirling_first_signed(4, 3), int(-6));
        assert_eq!(stirling_first_signed(0, 0), int(1));
        assert_eq!(stirling_second(0, 0), int(1));
        assert_eq!(stirling_second(4, 2), int(7));
        assert_eq!(stirling_second(3, 5), int(0));
        for n in 1..8 {
            assert_eq!(stirling_second(n, 1), int(1));
            assert_eq!(stirling_first_signed(n, n), int(1));
        }
    }

    #[test]
    fn bernoulli_values() {
        let want = [rat(1, 1), rat(-1, 2), rat(1, 6), rat(0, 1), rat(-1, 30), rat(0, 1), rat(1, 42)];
        for (m, w) in want.iter().enumerate() {
            assert_eq!(&bernoulli_number(m), w);
        }
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), int(1));
        assert_eq!(euler_number(1), int(0));
        assert_eq!(euler_number(2), int(-1));
        assert_eq!(euler_number(4), int(5));
        assert_eq!(euler_number(6), int(-61));
    }

    #[test]
    fn tables_agree_with_free_functions() {
        let tables: Vec<_> = [
            TableKind::Binomial,
            TableKind::StirlingFirstSigned,
            TableKind::StirlingSecond,
            TableKind::Bernoulli,
            TableKind::EulerNumber,
        ]
        .into_iter()
        .map(CombinatorialTable::new)
        .collect();
        for n in (0..12).rev() {
            for k in 0..=n {
                assert_eq!(tables[0].get(n, k), binomial(n as u64, k as i64));
                assert_eq!(tables[1].get(n, k), stirling_first_signed(n, k));
                assert_eq!(tables[2].get(n, k), stirling_second(n, k));
            }
            assert_eq!(tables[3].value(n), bernoulli_number(n));
            assert_eq!(tables[4].value(n), euler_number(n));
        }
        assert_eq!(tables[0].max_index(), Some(11));
    }
}
