use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::polynomial::Rational;

/// A polynomial in one variable `η` with rational coefficients, stored from
/// the constant term up. Used for eventual Hilbert–Samuel polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `η^i`.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, t: i64) -> Rational {
        let t = Rational::from_integer(BigInt::from(t));
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    /// The unique polynomial of degree `< points.len()` through the points.
    pub fn interpolate(points: &[(i64, Rational)]) -> UniPoly {
        let n = points.len();
        let mut result = vec![Rational::zero(); n];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial Π_{j≠i} (t − x_j)/(x_i − x_j)
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let xj_r = Rational::from_integer(BigInt::from(*xj));
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (d, c) in basis.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * &xj_r;
                }
                basis = next;
                denom *= Rational::from_integer(BigInt::from(xi - xj));
            }
            let scale = yi / denom;
            for (d, c) in basis.iter().enumerate() {
                result[d] += c * &scale;
            }
        }
        UniPoly::new(result)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = !abs.is_one() || d == 0;
            match (d, show_coeff) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "{abs}*eta")?,
                (1, false) => write!(f, "eta")?,
                (_, true) => write!(f, "{abs}*eta^{d}")?,
                (_, false) => write!(f, "eta^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}
