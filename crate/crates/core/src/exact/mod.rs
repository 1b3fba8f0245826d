//! Exact integers, rationals and the combinatorial number families.

mod combinatorics;
mod rational;

pub use combinatorics::{
    bernoulli_by_recurrence, bernoulli_number, bernoulli_numbers, binomial, binomial_general,
    euler_number, falling_factorial, factorial, stirling_first_signed, stirling_second,
    CombinatorialTable, TableKind,
};
pub use rational::{
    int, parse_rational, pow2, rat, rational_text, serde_rational, serde_rationals,
    ParseRationalError,
};
