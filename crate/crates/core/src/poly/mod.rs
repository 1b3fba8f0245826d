//! Exact polynomials, truncated power series and the Euler and generalized
//! Bernoulli polynomial families.

mod families;
mod laurent;
mod polynomial;
mod series;

pub use families::{euler_poly, gen_bernoulli_explicit, gen_bernoulli_poly};
pub use laurent::LaurentPolynomial;
pub use polynomial::{poly_derivative, poly_eval, Polynomial};
pub use series::{series_kernel, SeriesKernel, TruncatedSeries};
