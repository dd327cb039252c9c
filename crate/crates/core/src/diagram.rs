//! Diagrams of initial exponents: co-ideals `N ⊆ ℕ^m` with `N + ℕ^m = N`,
//! stored by their vertices, and the lattice-point counting on their
//! complements.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::poly::{exponents_of_length, integer, Exponent, Rational, UniPoly};

/// Above this many vertices `phi` enumerates lattice points instead of
/// running inclusion–exclusion over vertex subsets.
const INCLUSION_EXCLUSION_MAX_VERTICES: usize = 24;

const PHI_THRESHOLD_CAP: u64 = 1 << 14;

/// A diagram in `ℕ^m`, held by its vertex set `V(N)`.
///
/// Vertices are pairwise incomparable and sorted by the monomial order, so
/// two diagrams are equal exactly when their vertex lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    m: usize,
    vertices: Vec<Exponent>,
}

/// The `a`-level `L_a(N) = {β' ∈ ℕ^k : (β', a) ∉ N}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    pub a: Exponent,
    pub members: Vec<Exponent>,
}

impl Level {
    /// `δ_a(N)`.
    pub fn delta(&self) -> usize {
        self.members.len()
    }
}

/// The eventual polynomial of a counting function together with where it
/// was fitted and the first point from which it agrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventualPolynomial {
    pub poly: UniPoly,
    /// Start of the interpolation window.
    pub threshold: u64,
    /// Smallest `η` such that the polynomial agrees with the counting
    /// function on `[matches_from, threshold]`.
    pub matches_from: u64,
}

impl Diagram {
    /// The empty diagram (the zero ideal): `Δ = ℕ^m`.
    pub fn empty(m: usize) -> Self {
        Diagram { m, vertices: Vec::new() }
    }

    /// Minimal elements of `exponents` generate the diagram.
    pub fn from_exponents<I>(m: usize, exponents: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let mut all: Vec<Exponent> = Vec::new();
        for e in exponents {
            check_dim(m, e.dim())?;
            all.push(e);
        }
        Ok(Diagram { m, vertices: minimal_elements(all) })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The diagram of the unit ideal, `N = ℕ^m`.
    pub fn is_everything(&self) -> bool {
        self.vertices.iter().any(Exponent::is_zero)
    }

    pub fn contains(&self, b: &Exponent) -> bool {
        debug_assert_eq!(b.dim(), self.m);
        self.vertices.iter().any(|v| v.divides(b))
    }

    /// `α` such that `α·e_i` is a vertex (zero-based axis `i`).
    pub fn axis_vertex(&self, i: usize) -> Option<u32> {
        self.vertices
            .iter()
            .find(|v| v.axis_index() == Some(i))
            .map(|v| v.entries()[i])
    }

    /// Vertex on each of the first `k` axes. False when `k` is not in `1..m`.
    pub fn is_in_dk(&self, k: usize) -> bool {
        if k == 0 || k >= self.m {
            return false;
        }
        (0..k).all(|i| self.axis_vertex(i).is_some())
    }

    /// In `D_k(m)` and no vertex on the remaining axes.
    pub fn is_in_dk_star(&self, k: usize) -> bool {
        self.is_in_dk(k) && (k..self.m).all(|i| self.axis_vertex(i).is_none())
    }

    /// `ℕ^m \ N` is finite: a vertex on every axis, or `N = ℕ^m`.
    pub fn has_finite_complement(&self) -> bool {
        self.is_everything() || (0..self.m).all(|i| self.axis_vertex(i).is_some())
    }

    /// Krull dimension of the quotient: the most coordinates spanning a
    /// subspace that misses `N`. `None` for `N = ℕ^m`.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_everything() {
            return None;
        }
        (0u64..1 << self.m)
            .filter(|mask| self.vertices.iter().all(|v| v.entries().iter().enumerate().any(|(i, &e)| e > 0 && mask >> i & 1 == 0)))
            .map(|mask| mask.count_ones() as usize)
            .max()
    }

    /// Largest vertex length, `l₀`. Zero for the empty diagram.
    pub fn max_vertex_length(&self) -> u32 {
        self.vertices.iter().map(Exponent::length).max().unwrap_or(0)
    }

    /// Complement points of length at most `eta`, in increasing order.
    pub fn complement_up_to(&self, eta: u32) -> Vec<Exponent> {
        (0..=eta)
            .flat_map(|n| exponents_of_length(self.m, n))
            .filter(|b| !self.contains(b))
            .collect()
    }

    /// The whole complement, when finite.
    pub fn complement(&self) -> Result<Vec<Exponent>> {
        if !self.has_finite_complement() {
            return Err(Error::InfiniteComplement);
        }
        if self.is_everything() {
            return Ok(Vec::new());
        }
        // every complement point lies in the box below the axis vertices
        let bound: u32 = (0..self.m).map(|i| self.axis_vertex(i).unwrap() - 1).sum();
        Ok(self.complement_up_to(bound))
    }

    pub fn is_subset_of(&self, other: &Diagram) -> bool {
        self.m == other.m && self.vertices.iter().all(|v| other.contains(v))
    }

    /// Smallest length at which membership in the two diagrams differs.
    ///
    /// A minimal point of the symmetric difference is a vertex of one side,
    /// so it suffices to scan the vertices.
    pub fn first_difference_length(&self, other: &Diagram) -> Option<u32> {
        let left = self.vertices.iter().filter(|v| !other.contains(v));
        let right = other.vertices.iter().filter(|v| !self.contains(v));
        left.chain(right).map(Exponent::length).min()
    }

    /// `N₁ ∩ {|β| ≤ l} = N₂ ∩ {|β| ≤ l}`.
    pub fn truncated_equal(&self, other: &Diagram, l: u32) -> bool {
        self.m == other.m && self.first_difference_length(other).is_none_or(|d| d > l)
    }

    /// The `a`-level over `a ∈ ℕ^{m−k}`.
    pub fn level(&self, k: usize, a: &Exponent) -> Result<Level> {
        if k == 0 || k >= self.m {
            return Err(Error::KOutOfRange { k, m: self.m });
        }
        check_dim(self.m - k, a.dim())?;
        // vertices that lie below the fibre over `a`, projected to ℕ^k
        let heads: Vec<Exponent> = self
            .vertices
            .iter()
            .filter(|v| v.tail(k).divides(a))
            .map(|v| v.head(k))
            .collect();
        let slice = Diagram { m: k, vertices: minimal_elements(heads) };
        let members = slice
            .complement()
            .map_err(|_| Error::InfiniteLevel { a: a.entries().to_vec() })?;
        Ok(Level { a: a.clone(), members })
    }

    /// `N̄`: the largest coordinate any vertex has beyond position `k`.
    pub fn tail_bound(&self, k: usize) -> u32 {
        self.vertices
            .iter()
            .flat_map(|v| v.entries()[k..].iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// The level over `(N̄, …, N̄)`, which every level over `a ≥ (N̄, …, N̄)`
    /// coincides with.
    pub fn generic_level(&self, k: usize) -> Result<Level> {
        if k == 0 || k >= self.m {
            return Err(Error::KOutOfRange { k, m: self.m });
        }
        if !self.is_in_dk_star(k) {
            return Err(Error::NotInDkStar { k, m: self.m });
        }
        let a = Exponent::new(vec![self.tail_bound(k); self.m - k]);
        self.level(k, &a)
    }

    /// `Φ_N(η) = #(Δ(N) ∩ {|β| ≤ η})`.
    pub fn phi(&self, eta: u64) -> u64 {
        if self.vertices.len() > INCLUSION_EXCLUSION_MAX_VERTICES {
            let eta = u32::try_from(eta).expect("eta too large for enumeration");
            return self.complement_up_to(eta).len() as u64;
        }
        // #{|β| ≤ η} − #(N ∩ {|β| ≤ η}), the latter by inclusion–exclusion
        // over vertex subsets with the lcm of each subset.
        let total = simplex_count(eta as i64, self.m as u32) as i128;
        let mut inside: i128 = 0;
        let mut stack: Vec<(usize, Exponent, bool)> = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if u64::from(v.length()) <= eta {
                stack.push((i + 1, v.clone(), true));
            }
        }
        while let Some((next, lcm, odd)) = stack.pop() {
            let c = simplex_count(eta as i64 - i64::from(lcm.length()), self.m as u32) as i128;
            inside += if odd { c } else { -c };
            for j in next..self.vertices.len() {
                let l = lcm.lcm(&self.vertices[j]);
                if u64::from(l.length()) <= eta {
                    stack.push((j + 1, l, !odd));
                }
            }
        }
        (total - inside) as u64
    }

    /// The eventual polynomial of `Φ_N` for `N ∈ D*_k(m)`.
    ///
    /// Interpolates `m−k+1` consecutive values at `η ≥ η*` and validates the
    /// fit on `2(m−k)+2` further points; `η*` doubles on failure.
    pub fn phi_polynomial(&self, k: usize) -> Result<EventualPolynomial> {
        if k == 0 || k >= self.m {
            return Err(Error::KOutOfRange { k, m: self.m });
        }
        if !self.is_in_dk_star(k) {
            return Err(Error::NotInDkStar { k, m: self.m });
        }
        let d = (self.m - k) as u64;
        let sum_lengths: u64 = self.vertices.iter().map(|v| u64::from(v.length())).sum();
        let mut start = sum_lengths + self.m as u64 * (u64::from(self.tail_bound(k)) + 1);
        loop {
            let points: Vec<(i64, Rational)> = (start..=start + d)
                .map(|t| (t as i64, integer(self.phi(t) as i64)))
                .collect();
            let poly = UniPoly::interpolate(&points);
            let validation = start + d + 1..start + d + 1 + 2 * d + 2;
            let ok = validation
                .into_iter()
                .all(|t| poly.eval(t as i64) == integer(self.phi(t) as i64));
            if ok {
                let mut matches_from = start;
                while matches_from > 0
                    && poly.eval(matches_from as i64 - 1) == integer(self.phi(matches_from - 1) as i64)
                {
                    matches_from -= 1;
                }
                return Ok(EventualPolynomial { poly, threshold: start, matches_from });
            }
            if start >= PHI_THRESHOLD_CAP {
                return Err(Error::PolynomialFitFailed { eta: start });
            }
            start *= 2;
        }
    }

    /// `δ / (m−k)!` with `δ` the generic-level cardinality; the eventual
    /// polynomial of `Φ_N` must have this leading coefficient.
    pub fn expected_leading_coeff(&self, k: usize) -> Result<Rational> {
        let delta = self.generic_level(k)?.delta();
        let fact: i64 = (1..=(self.m - k) as i64).product();
        Ok(integer(delta as i64) / integer(fact))
    }
}

/// `S_t^d = #{β ∈ ℕ^d : |β| ≤ t} = binom(t+d, d)`, zero for `t < 0`.
pub fn simplex_count(t: i64, d: u32) -> u64 {
    if t < 0 {
        return 0;
    }
    let t = t as u128;
    let mut acc: u128 = 1;
    for i in 1..=u128::from(d) {
        acc = acc * (t + i) / i;
    }
    u64::try_from(acc).expect("simplex count overflows u64")
}

fn minimal_elements(mut all: Vec<Exponent>) -> Vec<Exponent> {
    all.sort();
    all.dedup();
    // a divisor is never larger in a degree-compatible order, so scanning in
    // increasing order only has to look back
    let mut out: Vec<Exponent> = Vec::new();
    for e in all {
        if !out.iter().any(|v| v.divides(&e)) {
            out.push(e);
        }
    }
    out
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram<")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

/// Leading coefficient of `S_t^d` as a polynomial in `t`: `1/d!`.
pub fn simplex_leading_coeff(d: u32) -> Rational {
    let fact: i64 = (1..=i64::from(d)).product();
    integer(1) / integer(fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::exponents_up_to;

    fn d2(v: &[[u32; 2]]) -> Diagram {
        Diagram::from_exponents(2, v.iter().map(|e| Exponent::from(*e))).unwrap()
    }

    fn d3(v: &[[u32; 3]]) -> Diagram {
        Diagram::from_exponents(3, v.iter().map(|e| Exponent::from(*e))).unwrap()
    }

    fn brute_phi(n: &Diagram, eta: u32) -> u64 {
        exponents_up_to(n.dim(), eta).iter().filter(|b| !n.contains(b)).count() as u64
    }

    #[test]
    fn vertices_are_minimal() {
        let n = d2(&[[2, 0], [3, 0], [0, 3]]);
        assert_eq!(n.vertices(), &[Exponent::from([2, 0]), Exponent::from([0, 3])]);
        let empty = Diagram::from_exponents(2, Vec::new()).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.phi(3), 10);
        assert!(Diagram::from_exponents(2, vec![Exponent::from([1, 0, 0])]).is_err());
    }

    #[test]
    fn membership() {
        let n = d2(&[[2, 0], [0, 3]]);
        assert!(!n.contains(&Exponent::from([1, 1])));
        assert!(n.contains(&Exponent::from([2, 5])));
    }

    #[test]
    fn dk_membership() {
        let a = d2(&[[2, 0]]);
        assert!(a.is_in_dk(1) && a.is_in_dk_star(1));
        let b = d2(&[[2, 0], [0, 4]]);
        assert!(b.is_in_dk(1) && !b.is_in_dk_star(1));
        assert!(!d2(&[[1, 1]]).is_in_dk(1));
    }

    #[test]
    fn dimension_counts_free_coordinates() {
        assert_eq!(d3(&[[3, 0, 0]]).dimension(), Some(2));
        assert_eq!(d3(&[[3, 0, 0], [0, 1, 2], [2, 2, 1]]).dimension(), Some(1));
        assert_eq!(d3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).dimension(), Some(0));
        assert_eq!(d3(&[[0, 0, 0]]).dimension(), None);
        assert_eq!(Diagram::empty(2).dimension(), Some(2));
    }

    #[test]
    fn levels() {
        let n = d2(&[[2, 0]]);
        let l = n.level(1, &Exponent::from([0])).unwrap();
        assert_eq!(l.delta(), 2);
        let n = d2(&[[2, 0], [1, 1], [0, 4]]);
        let l0 = n.level(1, &Exponent::from([0])).unwrap();
        assert_eq!(l0.members, vec![Exponent::from([0]), Exponent::from([1])]);
        let l1 = n.level(1, &Exponent::from([1])).unwrap();
        assert_eq!(l1.members, vec![Exponent::from([0])]);
        let n = d3(&[[1, 0, 0], [0, 1, 0]]);
        for a in 0..4 {
            let l = n.level(2, &Exponent::from([a])).unwrap();
            assert_eq!(l.members, vec![Exponent::from([0, 0])]);
        }
        let bad = d2(&[[1, 1]]);
        assert!(matches!(bad.level(1, &Exponent::from([0])), Err(Error::InfiniteLevel { .. })));
    }

    #[test]
    fn levels_match_box_enumeration() {
        let n = d2(&[[2, 0], [1, 1], [0, 4]]);
        for a in 0..6u32 {
            let brute: Vec<Exponent> = (0..10u32)
                .filter(|&b| !n.contains(&Exponent::from([b, a])))
                .map(|b| Exponent::from([b]))
                .collect();
            assert_eq!(n.level(1, &Exponent::from([a])).unwrap().members, brute);
        }
    }

    #[test]
    fn generic_levels() {
        let n = d2(&[[2, 0]]);
        let g = n.generic_level(1).unwrap();
        assert_eq!(g.a, Exponent::from([0]));
        assert_eq!(g.delta(), 2);
        let bad = d2(&[[2, 0], [1, 1], [0, 4]]);
        assert_eq!(bad.generic_level(1), Err(Error::NotInDkStar { k: 1, m: 2 }));
        let n = d2(&[[2, 0], [1, 2]]);
        let g = n.generic_level(1).unwrap();
        assert_eq!(g.a, Exponent::from([2]));
        assert_eq!(g.members, vec![Exponent::from([0])]);
        for j in 2..=6 {
            assert_eq!(n.level(1, &Exponent::from([j])).unwrap().members, g.members);
        }
    }

    #[test]
    fn generic_level_needs_every_tail_coordinate_large() {
        // a level over (5, 0) still sees the vertex-free x3 = 0 slice
        let n = d3(&[[2, 0, 0], [1, 0, 1]]);
        assert_eq!(n.level(1, &Exponent::from([5, 0])).unwrap().delta(), 2);
        assert_eq!(n.level(1, &Exponent::from([0, 5])).unwrap().delta(), 1);
        assert_eq!(n.generic_level(1).unwrap().delta(), 1);
    }

    #[test]
    fn phi_examples() {
        let n = d2(&[[2, 0]]);
        assert_eq!(n.phi(0), 1);
        for eta in 1..12 {
            assert_eq!(n.phi(eta), 2 * eta + 1);
        }
        let maximal = d3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        for eta in 0..6 {
            assert_eq!(maximal.phi(eta), 1);
        }
        let empty = Diagram::empty(2);
        for eta in 0..8u64 {
            assert_eq!(empty.phi(eta), (eta + 1) * (eta + 2) / 2);
        }
    }

    #[test]
    fn phi_matches_brute_force() {
        let n = d3(&[[2, 0, 0], [1, 1, 0], [0, 3, 1], [0, 1, 2], [1, 0, 3]]);
        for eta in 0..=10 {
            assert_eq!(n.phi(u64::from(eta)), brute_phi(&n, eta));
        }
    }

    #[test]
    fn simplex_counts() {
        for t in 0..10 {
            assert_eq!(simplex_count(t, 1), t as u64 + 1);
        }
        for d in 1..5 {
            assert_eq!(simplex_count(0, d), 1);
        }
        assert_eq!(simplex_count(3, 2), 10);
        assert_eq!(simplex_count(-1, 3), 0);
    }

    #[test]
    fn phi_polynomials() {
        let n = d2(&[[2, 0]]);
        let p = n.phi_polynomial(1).unwrap();
        assert_eq!(p.poly, UniPoly::new(vec![integer(1), integer(2)]));
        assert_eq!(p.matches_from, 0);
        let n = d3(&[[3, 0, 0]]);
        let p = n.phi_polynomial(1).unwrap();
        assert_eq!(p.poly.degree(), Some(2));
        assert_eq!(p.poly.leading_coeff(), crate::poly::rational(3, 2));
        let full = d2(&[[1, 0], [0, 1]]);
        assert!(full.phi_polynomial(2).is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(d2(&[[2, 0], [0, 3]]), d2(&[[0, 3], [2, 0]]));
        assert!(d2(&[[2, 0]]).is_subset_of(&d2(&[[1, 0]])));
        assert!(!d2(&[[1, 0]]).is_subset_of(&d2(&[[2, 0]])));
        let a = d2(&[[2, 0]]);
        let b = d2(&[[2, 0], [0, 9]]);
        assert!(a.truncated_equal(&b, 8));
        assert!(!a.truncated_equal(&b, 9));
    }

    #[test]
    fn first_difference_matches_brute_force() {
        let a = d2(&[[3, 0], [1, 2], [0, 5]]);
        let b = d2(&[[3, 0], [2, 1], [0, 4]]);
        let brute = exponents_up_to(2, 12)
            .into_iter()
            .find(|e| a.contains(e) != b.contains(e))
            .map(|e| e.length());
        assert_eq!(a.first_difference_length(&b), brute);
    }

    #[test]
    fn complement_listing() {
        let n = d2(&[[2, 0], [0, 2]]);
        assert_eq!(n.complement().unwrap().len(), 4);
        assert_eq!(d2(&[[2, 0]]).complement(), Err(Error::InfiniteComplement));
        assert_eq!(d2(&[[0, 0]]).complement().unwrap().len(), 0);
    }
}
