//! Diagrams of initial exponents for ideals in the local ring
//! `ℚ[x₁..x_m]_{(x)}`, Hilbert–Samuel functions read off by lattice counting,
//! multiplicities of complete intersections and their finite determinacy.

pub mod cli;
pub mod determinacy;
pub mod diagram;
pub mod error;
pub mod hilbert;
pub mod parse;
pub mod poly;
pub mod standard_basis;

pub use diagram::Diagram;
pub use error::{Error, Result};
pub use parse::{format_polynomial, parse_polynomial};
pub use poly::{Exponent, Matrix, Polynomial, Rational};
pub use standard_basis::{compute_standard_basis, IdealPresentation, StandardBasis};
