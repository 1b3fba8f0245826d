//! Exact and high-precision machinery for the dyadic cosecant power sums
//!
//! ```text
//! S(s, n) = sum_{j=1}^{2^{n-2}} csc^s((2j - 1) pi / 2^n)
//! ```
//!
//! together with the generalized Bernoulli and Euler polynomial identities
//! behind their closed forms, the transfer matrices `M_n`, and the zeta
//! approximations built on top of them.
//!
//! Polynomial and series arithmetic is generic over [`Scalar`]; the exact
//! instantiation over [`Rational`] is what every closed form uses.

pub mod csc;
pub mod exact;
pub mod identities;
pub mod numeric;
pub mod poly;
pub mod scalar;
pub mod zeta;

pub use scalar::Scalar;

pub use csc::{
    direct_sum, even_matrix_full, even_row, even_sum_exact, matrix_first_row, matrix_full,
    odd_coeff_row, CoefficientRow, CscError, SineBasis, SumQuery, TransferMatrix, TrigLemma,
};
pub use exact::{
    bernoulli_number, binomial, euler_number, stirling_first_signed, stirling_second,
    CombinatorialTable, TableKind,
};
pub use identities::{CheckReport, CheckStatus, IdentityError, IdentityId, Params};
pub use numeric::{FloatContext, HighPrecFloat};
pub use poly::{
    euler_poly, gen_bernoulli_explicit, gen_bernoulli_poly, poly_derivative, poly_eval,
    series_kernel, LaurentPolynomial, Polynomial, SeriesKernel, TruncatedSeries,
};
pub use zeta::{PiMultiple, QuadratureConfig, QuadratureMethod, ZetaError};

/// Arbitrary precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary precision rational in canonical form.
pub type Rational = num_rational::BigRational;

pub type RationalPoly = Polynomial<Rational>;
pub type RationalSeries = TruncatedSeries<Rational>;
pub type RationalLaurent = LaurentPolynomial<Rational>;
pub type F64Poly = Polynomial<f64>;
pub type F32Poly = Polynomial<f32>;

/// Default working precision, in bits, for numeric oracles.
pub const DEFAULT_PRECISION: usize = 256;
