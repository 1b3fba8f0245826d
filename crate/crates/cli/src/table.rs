use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use sinesum::csc::{even_sum_exact, odd_coeff_row};
use sinesum::zeta::zeta_odd_limit_table;

use crate::output::Table;
use crate::CliError;

/// Largest level for kinds that sum term by term or list `2^{n-2}` entries.
pub const DIRECT_MAX_N: u32 = 14;
/// Largest `k` accepted by `EVEN_SUMS`.
pub const EVEN_SUMS_MAX_K: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    EvenSums,
    OddRows,
    ZConvergence,
}

impl TableKind {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::EvenSums => "EVEN_SUMS",
            Self::OddRows => "ODD_ROWS",
            Self::ZConvergence => "Z_CONVERGENCE",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "EVEN_SUMS" => Ok(Self::EvenSums),
            "ODD_ROWS" => Ok(Self::OddRows),
            "Z_CONVERGENCE" => Ok(Self::ZConvergence),
            _ => Err(format!("unknown table kind `{s}` (EVEN_SUMS, ODD_ROWS, Z_CONVERGENCE)")),
        }
    }
}

/// What to tabulate. `index` is `k` for `EVEN_SUMS` and `m` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub kind: TableKind,
    pub index: u32,
    pub ns: RangeInclusive<u32>,
    pub precision: usize,
}

fn range_err(name: &str, value: u32, range: &str) -> CliError {
    CliError::new("RANGE", format!("{name} = {value} out of range ({range})"))
}

/// `EVEN_SUMS` rows come from the exact closed form at any level; the other
/// kinds are limited to `n <= 14`.
pub fn emit_table(spec: &TableSpec) -> Result<Table, CliError> {
    let (lo, hi) = (*spec.ns.start(), *spec.ns.end());
    if lo > hi {
        return Err(CliError::new("RANGE", format!("empty level range {lo}..={hi}")));
    }
    match spec.kind {
        TableKind::EvenSums => {
            if !(1..=EVEN_SUMS_MAX_K).contains(&spec.index) {
                return Err(range_err("k", spec.index, "1..=64"));
            }
            if lo < 2 {
                return Err(range_err("n", lo, ">= 2"));
            }
            let mut t = Table::new(["k", "n", "value"]);
            for n in spec.ns.clone() {
                t.push([spec.index.to_string(), n.to_string(), even_sum_exact(spec.index, n).to_string()]);
            }
            Ok(t)
        }
        TableKind::OddRows => {
            if spec.index > 32 {
                return Err(range_err("m", spec.index, "0..=32"));
            }
            for n in [lo, hi] {
                if !(2..=DIRECT_MAX_N).contains(&n) {
                    return Err(range_err("n", n, "2..=14"));
                }
            }
            let mut t = Table::new(["m", "n", "j", "coeff"]);
            for n in spec.ns.clone() {
                let row = odd_coeff_row(spec.index, n);
                for (j, c) in row.entries.iter().enumerate() {
                    t.push([spec.index.to_string(), n.to_string(), (j + 1).to_string(), c.to_string()]);
                }
            }
            Ok(t)
        }
        TableKind::ZConvergence => {
            for n in [lo, hi] {
                if !(3..=DIRECT_MAX_N).contains(&n) {
                    return Err(range_err("n", n, "3..=14"));
                }
            }
            let rows = zeta_odd_limit_table(spec.index, spec.ns.clone(), spec.precision)?;
            let mut t = Table::new(["m", "n", "value", "reference", "error"]);
            for r in rows {
                t.push([
                    r.m.to_string(),
                    r.n.to_string(),
                    r.value.to_string(),
                    r.reference.to_string(),
                    r.error.to_sci_string(12),
                ]);
            }
            Ok(t)
        }
    }
}
