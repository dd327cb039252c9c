//! Exact multivariate polynomials over ℚ, the local degree ordering on
//! exponents, jets, evaluation and linear coordinate changes.

mod exponent;
mod linear;
mod polynomial;
mod univariate;

pub use exponent::{compare, exponents_of_length, exponents_up_to, Exponent, OrderKey};
pub use linear::Matrix;
pub use polynomial::{integer, rational, serialize_rational, Jet, Polynomial, Rational};
pub use univariate::UniPoly;
