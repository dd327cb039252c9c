//! Hilbert–Samuel functions and multiplicities.
//!
//! `H_I(η)` is read off the diagram as the number of complement points of
//! length at most `η`. [`hs_oracle`] recomputes it by exact linear algebra in
//! `ℚ[x]/𝔪^{η+1}` without going through standard bases.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::determinacy::check_regular_sequence;
use crate::diagram::Diagram;
use crate::error::{check_dim, Error, Result};
use crate::poly::{exponents_up_to, integer, Exponent, Matrix, Polynomial, Rational, UniPoly};
use crate::standard_basis::{compute_standard_basis, evaluated_ideal, IdealPresentation};

/// `H(η) = Φ_N(η)`.
pub fn hs_function(n: &Diagram, eta: u64) -> u64 {
    n.phi(eta)
}

/// The span of `{trunc_η(x^γ f_i)}` inside `ℚ[x]/𝔪^{η+1}`, kept in echelon
/// form keyed by leading monomial.
///
/// Column order is the local degree ordering, so the pivots of degree `≤ η'`
/// are exactly the leading monomials of the truncation to `η'`: one
/// elimination answers every smaller `η'` as well.
#[derive(Debug, Clone)]
pub struct TruncatedIdealSpace {
    m: usize,
    eta: u32,
    pivots: BTreeMap<Exponent, Polynomial>,
}

impl TruncatedIdealSpace {
    pub fn new(p: &IdealPresentation, eta: u32) -> Self {
        let m = p.dim();
        let mut space = TruncatedIdealSpace { m, eta, pivots: BTreeMap::new() };
        for f in p.generators() {
            let ord = f.order().expect("nonzero generator");
            if ord > eta {
                continue;
            }
            for gamma in exponents_up_to(m, eta - ord) {
                let row = f.mul_term(&gamma, &integer(1)).truncate(eta);
                space.insert(row);
            }
        }
        space
    }

    fn reduce(&self, mut row: Polynomial) -> Polynomial {
        loop {
            let Ok(lead) = row.initial_exponent() else { return row };
            let Some(pivot) = self.pivots.get(lead) else { return row };
            let c = row.initial_coeff().unwrap().clone();
            row.sub_mul_term(&Exponent::zero(self.m), &c, pivot);
        }
    }

    fn insert(&mut self, row: Polynomial) {
        let row = self.reduce(row);
        if let Ok(lead) = row.initial_exponent() {
            let lead = lead.clone();
            let c = row.initial_coeff().unwrap().clone();
            let row = row.scale(&(integer(1) / c));
            self.pivots.insert(lead, row);
        }
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// `dim ℚ[x]/(I + 𝔪^{η'+1})` for `η' ≤ η`.
    pub fn quotient_dim(&self, eta: u32) -> u64 {
        assert!(eta <= self.eta, "space truncated at {}", self.eta);
        let all = crate::diagram::simplex_count(i64::from(eta), self.m as u32);
        let inside = self.pivots.keys().filter(|e| e.length() <= eta).count() as u64;
        all - inside
    }

    /// `f ∈ I + 𝔪^{η+1}`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_dim(self.m, f.dim())?;
        Ok(self.reduce(f.truncate(self.eta)).is_zero())
    }
}

/// `dim ℚ[x]/(I + 𝔪^{η+1})` by row reduction of the truncated Macaulay
/// matrix.
pub fn hs_oracle(p: &IdealPresentation, eta: u32) -> u64 {
    TruncatedIdealSpace::new(p, eta).quotient_dim(eta)
}

/// `hs_oracle(p, η)` for every `η ≤ eta_max`, from a single elimination.
pub fn hs_oracle_table(p: &IdealPresentation, eta_max: u32) -> Vec<u64> {
    let space = TruncatedIdealSpace::new(p, eta_max);
    (0..=eta_max).map(|eta| space.quotient_dim(eta)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSamuelTable {
    /// `(η, H(η))` from `η = 0` through the end of the validation window.
    pub values: Vec<(u64, u64)>,
    pub eventual_polynomial: UniPoly,
    pub threshold: u64,
    pub matches_from: u64,
    pub dimension: usize,
    pub multiplicity: u64,
}

/// Tabulate `H` and fit its eventual polynomial. The diagram must already
/// lie in `D*_k(m)`. `dimension` is the degree of the fit; it is `m − k`
/// unless the generic level is empty.
pub fn hs_table(p: &IdealPresentation, k: usize) -> Result<HilbertSamuelTable> {
    let n = compute_standard_basis(p)?.diagram().clone();
    hs_table_of_diagram(&n, k)
}

pub fn hs_table_of_diagram(n: &Diagram, k: usize) -> Result<HilbertSamuelTable> {
    let fit = n.phi_polynomial(k)?;
    let d = fit.poly.degree().expect("a proper diagram has a nonempty complement");
    let end = fit.threshold + 3 * (n.dim() - k) as u64 + 2;
    let values = (0..=end).map(|eta| (eta, hs_function(n, eta))).collect();
    let fact: i64 = (1..=d as i64).product();
    let e = fit.poly.leading_coeff() * integer(fact);
    let multiplicity = rational_to_u64(&e)
        .ok_or_else(|| Error::Falsified(format!("non-integral multiplicity {e}")))?;
    Ok(HilbertSamuelTable {
        values,
        eventual_polynomial: fit.poly,
        threshold: fit.threshold,
        matches_from: fit.matches_from,
        dimension: d,
        multiplicity,
    })
}

fn rational_to_u64(r: &Rational) -> Option<u64> {
    if r.is_integer() {
        r.to_integer().to_u64()
    } else {
        None
    }
}

/// `e = δ`, the size of the generic level.
pub fn multiplicity_via_generic_level(n: &Diagram, k: usize) -> Result<u64> {
    Ok(n.generic_level(k)?.delta() as u64)
}

/// `e = #(ℕ^k \ N(I(0)))`.
pub fn multiplicity_via_evaluation(p: &IdealPresentation, k: usize) -> Result<u64> {
    let p0 = evaluated_ideal(p, k)?;
    let n0 = compute_standard_basis(&p0)?.diagram().clone();
    Ok(n0.complement()?.len() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub matrix: Matrix,
    pub diagram: Diagram,
    pub via_hilbert_samuel: u64,
    pub via_generic_level: u64,
    pub via_evaluation: u64,
    pub consistent: bool,
}

impl MultiplicityReport {
    pub fn triple(&self) -> (u64, u64, u64) {
        (self.via_hilbert_samuel, self.via_generic_level, self.via_evaluation)
    }
}

/// Normalize coordinates, then compute `e(I)` by the eventual Hilbert–Samuel
/// polynomial, by the generic level and by the evaluated ideal.
///
/// Disagreement is reported in `consistent`, never hidden.
pub fn verify_multiplicity_consistency(
    p: &IdealPresentation,
    k: usize,
    seed: u64,
) -> Result<MultiplicityReport> {
    let cert = check_regular_sequence(p, k, seed)?;
    if !cert.certified {
        return Err(Error::NotCertified(format!("no normalizing coordinate change for k = {k}")));
    }
    let q = p.transform(&cert.matrix)?;
    let n = cert.diagram.clone();
    let via_hilbert_samuel = hs_table_of_diagram(&n, k)?.multiplicity;
    let via_generic_level = multiplicity_via_generic_level(&n, k)?;
    let via_evaluation = multiplicity_via_evaluation(&q, k)?;
    Ok(MultiplicityReport {
        matrix: cert.matrix,
        diagram: n,
        via_hilbert_samuel,
        via_generic_level,
        via_evaluation,
        consistent: via_hilbert_samuel == via_generic_level && via_generic_level == via_evaluation,
    })
}
