use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Result};

/// A multi-index `β ∈ ℕ^m`, standing for the monomial `x₁^β₁ ⋯ x_m^β_m`.
///
/// The `Ord` impl is the local degree ordering used throughout the crate:
/// first by length `|β|`, then lexicographically on the entries read from
/// the last variable to the first. The minimum of a support is its initial
/// exponent, so among monomials of equal degree the one with the most weight
/// on the leading variables comes first (`x² < xy < y²`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(m: usize) -> Self {
        Exponent(vec![0; m])
    }

    /// The `i`-th unit vector scaled by `alpha`.
    pub fn axis(m: usize, i: usize, alpha: u32) -> Self {
        let mut e = vec![0; m];
        e[i] = alpha;
        Exponent(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Length `|β| = β₁ + … + β_m`.
    pub fn length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn order_key(&self) -> OrderKey {
        let mut key = Vec::with_capacity(self.0.len() + 1);
        key.push(self.length());
        key.extend(self.0.iter().rev());
        OrderKey(key)
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, defined when `other` divides `self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if !other.divides(self) {
            return None;
        }
        Some(Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The coordinate `i` if this exponent lies on the `i`-th axis (and is not
    /// the origin).
    pub fn axis_index(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &b)| b > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    /// Drop the trailing `m − k` coordinates.
    pub fn head(&self, k: usize) -> Exponent {
        Exponent(self.0[..k].to_vec())
    }

    pub fn tail(&self, k: usize) -> Exponent {
        Exponent(self.0[k..].to_vec())
    }

    pub fn concat(&self, tail: &Exponent) -> Exponent {
        let mut e = self.0.clone();
        e.extend_from_slice(&tail.0);
        Exponent(e)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The tuple `(|β|, β_m, …, β₁)`; lexicographic comparison of keys is the
/// monomial order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey(pub Vec<u32>);

/// Compare two exponents in the local degree ordering.
pub fn compare(a: &Exponent, b: &Exponent) -> Result<Ordering> {
    check_dim(a.dim(), b.dim())?;
    Ok(a.cmp(b))
}

/// All exponents of `ℕ^m` with length exactly `n`, in increasing order.
pub fn exponents_of_length(m: usize, n: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    fill_compositions(&mut cur, 0, n, &mut out);
    out.sort();
    out
}

/// All exponents of `ℕ^m` with length at most `n`, in increasing order.
pub fn exponents_up_to(m: usize, n: u32) -> Vec<Exponent> {
    (0..=n).flat_map(|d| exponents_of_length(m, d)).collect()
}

fn fill_compositions(cur: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<Exponent>) {
    let m = cur.len();
    if m == 0 {
        if rest == 0 {
            out.push(Exponent(Vec::new()));
        }
        return;
    }
    if pos == m - 1 {
        cur[pos] = rest;
        out.push(Exponent(cur.clone()));
        return;
    }
    for v in 0..=rest {
        cur[pos] = v;
        fill_compositions(cur, pos + 1, rest - v, out);
    }
    cur[pos] = 0;
}
