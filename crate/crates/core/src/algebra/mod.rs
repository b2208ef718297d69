//! Exact linear and polynomial algebra over the integers and rationals.

mod factor;
mod interp;
mod matrix;
mod poly;
mod ratfun;

pub use factor::is_irreducible;
pub(crate) use interp::clear_denominators;
pub use interp::{interpolate, rational_to_int_poly};
pub use matrix::{char_poly, Matrix};
pub use poly::{poly_gcd, poly_squarefree, IntPoly};
pub use ratfun::{distinct_pole_count, rf_normalize, RationalFunction};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub(crate) fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
