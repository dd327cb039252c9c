use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::exponent::Exponent;
use super::linear::Matrix;
use crate::error::{check_dim, Error, Result};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial in `m` variables with exact rational coefficients.
///
/// Terms are kept in a map ordered by the local degree ordering, so the
/// initial term is always the first entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    m: usize,
    terms: BTreeMap<Exponent, Rational>,
}

/// The `μ`-jet of a polynomial: its canonical representative modulo `𝔪^{μ+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet {
    pub poly: Polynomial,
    pub order: u32,
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Polynomial { m, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        Self::term(Exponent::zero(m), c)
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rational::one())
    }

    pub fn term(exponent: Exponent, c: Rational) -> Self {
        let m = exponent.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Polynomial { m, terms }
    }

    pub fn monomial(exponent: Exponent) -> Self {
        Self::term(exponent, Rational::one())
    }

    /// The coordinate function `x_i` (zero-based).
    pub fn var(m: usize, i: usize) -> Self {
        Self::monomial(Exponent::axis(m, i, 1))
    }

    /// Collect like terms; rejects exponents of the wrong dimension.
    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Polynomial::zero(m);
        for (e, c) in terms {
            check_dim(m, e.dim())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn initial_exponent(&self) -> Result<&Exponent> {
        self.terms.keys().next().ok_or(Error::ZeroPolynomial)
    }

    pub fn initial_coeff(&self) -> Result<&Rational> {
        self.terms.values().next().ok_or(Error::ZeroPolynomial)
    }

    pub fn initial_term(&self) -> Result<Polynomial> {
        let (e, c) = self.terms.iter().next().ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial::term(e.clone(), c.clone()))
    }

    /// Order of vanishing at the origin, `|inexp(F)|`.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Exponent::length)
    }

    /// Total degree.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::length).max()
    }

    /// `deg F − |inexp F|`.
    pub fn ecart(&self) -> u32 {
        match (self.degree(), self.order()) {
            (Some(d), Some(o)) => d - o,
            _ => 0,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.order() == Some(0)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.m, other.m)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.m, other.m)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.m, other.m)?;
        let mut out = Polynomial::zero(self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.m);
        }
        Polynomial {
            m: self.m,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// `c · x^shift · self`.
    pub fn mul_term(&self, shift: &Exponent, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.m);
        }
        Polynomial {
            m: self.m,
            terms: self.terms.iter().map(|(e, v)| (e.add(shift), v * c)).collect(),
        }
    }

    /// `self − c · x^shift · other`, in place.
    pub(crate) fn sub_mul_term(&mut self, shift: &Exponent, c: &Rational, other: &Polynomial) {
        self.sub_mul_term_upto(shift, c, other, None);
    }

    /// As [`sub_mul_term`](Self::sub_mul_term), skipping product terms of
    /// length above `bound`.
    pub(crate) fn sub_mul_term_upto(&mut self, shift: &Exponent, c: &Rational, other: &Polynomial, bound: Option<u32>) {
        let s = shift.length();
        for (e, v) in &other.terms {
            if bound.is_some_and(|b| e.length() + s > b) {
                break;
            }
            self.add_term(e.add(shift), -(v * c));
        }
    }

    /// Drop every term of length greater than `mu`, in place.
    pub(crate) fn truncate_in_place(&mut self, mu: u32) {
        while self.terms.last_key_value().is_some_and(|(e, _)| e.length() > mu) {
            self.terms.pop_last();
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.m);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Drop every term of length greater than `mu`.
    pub fn truncate(&self, mu: u32) -> Polynomial {
        Polynomial {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.length() <= mu)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mu_jet(&self, mu: u32) -> Jet {
        Jet { poly: self.truncate(mu), order: mu }
    }

    /// Set `x_{k+1} = … = x_m = 0` and view the result in the first `k`
    /// variables.
    pub fn evaluate_at_zero(&self, k: usize) -> Result<Polynomial> {
        if k == 0 || k >= self.m {
            return Err(Error::KOutOfRange { k, m: self.m });
        }
        let mut out = Polynomial::zero(k);
        for (e, c) in &self.terms {
            if e.entries()[k..].iter().all(|&b| b == 0) {
                out.terms.insert(e.head(k), c.clone());
            }
        }
        Ok(out)
    }

    /// Substitute `x_i ↦ Σ_j M_ij x_j` and expand.
    pub fn linear_change(&self, matrix: &Matrix) -> Result<Polynomial> {
        check_dim(self.m, matrix.size())?;
        if !matrix.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_linear(matrix))
    }

    /// Linear substitution without the invertibility check.
    pub(crate) fn substitute_linear(&self, matrix: &Matrix) -> Polynomial {
        let m = self.m;
        let forms: Vec<Polynomial> = (0..m)
            .map(|i| {
                let mut p = Polynomial::zero(m);
                for j in 0..m {
                    p.add_term(Exponent::axis(m, j, 1), matrix.get(i, j).clone());
                }
                p
            })
            .collect();
        // powers[i][e] = forms[i]^e, grown lazily
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(m)]; m];
        let mut out = Polynomial::zero(m);
        for (e, c) in &self.terms {
            let mut prod = Polynomial::constant(m, c.clone());
            for (i, &b) in e.entries().iter().enumerate() {
                while powers[i].len() <= b as usize {
                    let next = powers[i].last().unwrap() * &forms[i];
                    powers[i].push(next);
                }
                if b > 0 {
                    prod = &prod * &powers[i][b as usize];
                }
            }
            for (pe, pc) in prod.terms {
                out.add_term(pe, pc);
            }
        }
        out
    }

    /// Scale to coprime integer coefficients with a positive initial
    /// coefficient. Generates the same ideal.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.initial_coeff().unwrap().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Bit length of the largest numerator or denominator.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.values().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
    }

    /// Rename the ambient space: embed into `ℕ^{m'}` with `m' ≥ m` by
    /// appending zero exponents.
    pub fn extend_dim(&self, new_m: usize) -> Polynomial {
        assert!(new_m >= self.m);
        let pad = Exponent::zero(new_m - self.m);
        Polynomial {
            m: new_m,
            terms: self.terms.iter().map(|(e, c)| (e.concat(&pad), c.clone())).collect(),
        }
    }

    /// Render with the given variable names, terms in increasing order.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWith { poly: self, names }
    }
}

struct DisplayWith<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_zero() {
                factors.push(abs.to_string());
            }
            for (i, &b) in e.entries().iter().enumerate() {
                let name = self.names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                match b {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{b}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.m).map(|i| format!("x{i}")).collect();
        fmt::Display::fmt(&DisplayWith { poly: self, names: &names }, f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.m, self)
    }
}

/// Serialize a rational as its reduced `p/q` string (`p` for integers).
pub fn serialize_rational<S: Serializer>(c: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

struct TermRef<'a>(&'a Exponent, &'a Rational);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("exponent", self.0)?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.end()
    }
}

/// A list of `{"exponent": [..], "coeff": "p/q"}` in increasing order.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&TermRef(e, c))?;
        }
        seq.end()
    }
}

impl Serialize for Jet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Jet", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("terms", &self.poly)?;
        st.end()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}
