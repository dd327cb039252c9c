//! Jets of ideals, stabilization of their diagrams, certification of
//! regular sequences and sampled checks of finite determinacy.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::hilbert::{hs_function, hs_oracle_table};
use crate::poly::{exponents_of_length, rational, Exponent, Matrix, Polynomial};
use crate::standard_basis::{compute_standard_basis, evaluated_ideal, standard_basis_within, IdealPresentation};

/// Largest entry bound tried when searching for a normalizing change.
pub const MATRIX_BOUND_CAP: i64 = 64;

/// Reduction steps allowed per coordinate change before the change is
/// skipped.
pub const FRAME_BUDGET: usize = 100_000;
const TRIES_PER_BOUND: usize = 4;
/// Singular draws are redrawn; this caps the redraws per try.
const MAX_SINGULAR_REDRAWS: usize = 32;

/// Replace every generator by its `μ`-jet, dropping jets that vanish.
pub fn truncated_ideal(p: &IdealPresentation, mu: u32) -> Result<IdealPresentation> {
    let gens: Vec<Polynomial> = p
        .generators()
        .iter()
        .map(|f| f.truncate(mu))
        .filter(|g| !g.is_zero())
        .collect();
    if gens.is_empty() {
        return Err(Error::AllJetsZero { mu });
    }
    IdealPresentation::new(p.variables().to_vec(), gens)
}

/// Outcome of the search for coordinates in which the diagram has a vertex
/// on each of the first `k` axes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularSequenceCertificate {
    pub k: usize,
    pub seed: u64,
    /// The accepted change, or the last one tried.
    pub matrix: Matrix,
    /// Matrices examined, the identity included.
    pub attempts: usize,
    /// Matrices abandoned after [`FRAME_BUDGET`] reduction steps.
    pub skipped: usize,
    /// Diagram after the change.
    pub diagram: Diagram,
    /// `α_i` with `α_i·e_i` a vertex, for `i < k`.
    pub axis_vertices: Vec<Option<u32>>,
    pub certified: bool,
}

/// The identity, then seeded random integer matrices with entries in
/// `[−B, B]` for `B = 1, 2, 4, …` up to [`MATRIX_BOUND_CAP`].
pub fn candidate_changes(m: usize, seed: u64) -> impl Iterator<Item = Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bounds = std::iter::successors(Some(1i64), |b| (*b < MATRIX_BOUND_CAP).then_some(b * 2));
    let random = bounds
        .flat_map(|b| std::iter::repeat_n(b, TRIES_PER_BOUND))
        .filter_map(move |b| {
            (0..MAX_SINGULAR_REDRAWS)
                .map(|_| Matrix::random_integer(m, b, &mut rng))
                .find(Matrix::is_invertible)
        });
    std::iter::once(Matrix::identity(m)).chain(random)
}

/// In the given coordinates: `N(I) ∈ D_k(m)` and `I(0)` has finite
/// colength.
fn is_normalized(q: &IdealPresentation, n: &Diagram, k: usize) -> Result<bool> {
    if !n.is_in_dk(k) || !n.is_in_dk_star(k) {
        return Ok(false);
    }
    let n0 = compute_standard_basis(&evaluated_ideal(q, k)?)?.diagram().clone();
    Ok(n0.has_finite_complement())
}

/// Certify that the `k` generators form a regular sequence.
///
/// With exactly `k` generators, a vertex on each of the first `k` axes forces
/// `dim = m − k`, which is the complete-intersection criterion. The search
/// stops at once when `dim ≠ m − k`; otherwise failure after the whole
/// search is "not certified", not a proof of the opposite. A change whose
/// standard basis needs more than [`FRAME_BUDGET`] steps is skipped.
pub fn check_regular_sequence(
    p: &IdealPresentation,
    k: usize,
    seed: u64,
) -> Result<RegularSequenceCertificate> {
    let m = p.dim();
    if k == 0 || k >= m {
        return Err(Error::KOutOfRange { k, m });
    }
    if p.generators().len() != k {
        return Err(Error::GeneratorCount { expected: k, found: p.generators().len() });
    }
    let mut last = None;
    let mut skipped = 0;
    for (idx, matrix) in candidate_changes(m, seed).enumerate() {
        let q = p.transform(&matrix)?;
        let n = match standard_basis_within(&q, FRAME_BUDGET) {
            Ok(sb) => sb.diagram().clone(),
            Err(Error::ReductionBudget(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let certified = is_normalized(&q, &n, k)?;
        let cert = RegularSequenceCertificate {
            k,
            seed,
            axis_vertices: (0..k).map(|i| n.axis_vertex(i)).collect(),
            matrix,
            attempts: idx + 1,
            skipped,
            diagram: n,
            certified,
        };
        // the dimension does not depend on the frame
        if certified || cert.diagram.dimension() != Some(m - k) {
            return Ok(cert);
        }
        last = Some(cert);
    }
    let mut cert = last.ok_or(Error::ReductionBudget(FRAME_BUDGET))?;
    cert.skipped = skipped;
    Ok(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiniteComplementBound {
    /// Largest vertex length.
    pub l0: u32,
    /// Largest generator initial-exponent length.
    pub l1: u32,
    /// One more than the largest complement length.
    pub l2: u32,
    pub mu0: u32,
}

/// `μ₀ = max{l₀, l₁, l₂}` for an ideal whose diagram has finite complement.
pub fn mu0_finite_complement(p: &IdealPresentation) -> Result<FiniteComplementBound> {
    let n = compute_standard_basis(p)?.diagram().clone();
    let complement = n.complement()?;
    let l0 = n.max_vertex_length();
    let l1 = p
        .generators()
        .iter()
        .map(|f| f.initial_exponent().map(Exponent::length))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let l2 = complement.iter().map(Exponent::length).max().map_or(0, |l| l + 1);
    Ok(FiniteComplementBound { l0, l1, l2, mu0: l0.max(l1).max(l2) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterminacyBound {
    pub certificate: RegularSequenceCertificate,
    /// `l₀` of `N(I)` in the normalized frame.
    pub l0: u32,
    /// Bounds for the evaluated ideal `I(0)`.
    pub evaluated: FiniteComplementBound,
    pub mu0: u32,
}

/// A jet order past which the diagram, and so the Hilbert–Samuel function,
/// no longer changes: `max{l₀(N(I)), μ₀(I(0))}` in normalized coordinates.
pub fn determinacy_bound(p: &IdealPresentation, k: usize, seed: u64) -> Result<DeterminacyBound> {
    let certificate = check_regular_sequence(p, k, seed)?;
    if !certificate.certified {
        return Err(Error::NotCertified(format!(
            "no normalizing change found after {} attempts",
            certificate.attempts
        )));
    }
    bound_in_frame(p, certificate)
}

fn bound_in_frame(p: &IdealPresentation, certificate: RegularSequenceCertificate) -> Result<DeterminacyBound> {
    let q = p.transform(&certificate.matrix)?;
    let evaluated = mu0_finite_complement(&evaluated_ideal(&q, certificate.k)?)?;
    let l0 = certificate.diagram.max_vertex_length();
    Ok(DeterminacyBound { mu0: l0.max(evaluated.mu0), l0, evaluated, certificate })
}

/// One row of a jet sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub mu: u32,
    /// Some jet vanished; the row carries no diagram.
    pub degenerate: bool,
    pub vertices: Option<Diagram>,
    /// `N(I) ⊆ N(I_μ)`.
    pub contains_original: Option<bool>,
    pub equal: Option<bool>,
    /// Smallest length where `N(I_μ)` and `N(I)` differ; `None` when equal.
    pub first_difference: Option<u32>,
    /// Largest `l` with agreement on `{|β| ≤ l}`; `None` when equal.
    pub truncated_equal_up_to: Option<u32>,
}

/// A guarantee that failed on some row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Falsification {
    pub mu: u32,
    pub claim: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JetSweepReport {
    pub k: usize,
    pub seed: u64,
    pub matrix: Matrix,
    pub certified: bool,
    pub diagram: Diagram,
    pub l0: u32,
    /// Present when `N(I)` has finite complement.
    pub finite_complement: Option<FiniteComplementBound>,
    /// Present when the generators were certified regular.
    pub certified_mu0: Option<u32>,
    pub records: Vec<SweepRecord>,
    /// Smallest `μ` in range from which every row equals `N(I)`.
    pub stabilized_from: Option<u32>,
    pub falsifications: Vec<Falsification>,
}

/// Compute `N(I_μ)` for each `μ` in the range, in one shared frame, and
/// compare against `N(I)`.
///
/// The frame is the normalizing change when the generators can be
/// certified regular with `k` of them, the identity otherwise.
pub fn jet_sweep(
    p: &IdealPresentation,
    k: usize,
    mu_range: std::ops::RangeInclusive<u32>,
    seed: u64,
) -> Result<JetSweepReport> {
    let m = p.dim();
    let certificate = if k >= 1 && k < m && p.generators().len() == k {
        Some(check_regular_sequence(p, k, seed)?).filter(|c| c.certified)
    } else {
        None
    };
    let matrix = certificate.as_ref().map_or_else(|| Matrix::identity(m), |c| c.matrix.clone());
    let q = p.transform(&matrix)?;
    let n = compute_standard_basis(&q)?.diagram().clone();
    let bound = certificate.map(|c| bound_in_frame(p, c)).transpose()?;
    let finite_complement = if n.has_finite_complement() { Some(mu0_finite_complement(&q)?) } else { None };
    sweep_in_frame(&q, &n, mu_range, |mu| jets_of(&q, mu), SweepContext {
        k,
        seed,
        matrix,
        certified_mu0: bound.map(|b| b.mu0),
        finite_complement,
    })
}

struct SweepContext {
    k: usize,
    seed: u64,
    matrix: Matrix,
    certified_mu0: Option<u32>,
    finite_complement: Option<FiniteComplementBound>,
}

fn jets_of(q: &IdealPresentation, mu: u32) -> Vec<Polynomial> {
    q.generators().iter().map(|f| f.truncate(mu)).collect()
}

fn sweep_in_frame<F>(
    q: &IdealPresentation,
    n: &Diagram,
    mu_range: std::ops::RangeInclusive<u32>,
    jets: F,
    ctx: SweepContext,
) -> Result<JetSweepReport>
where
    F: Fn(u32) -> Vec<Polynomial> + Sync,
{
    let l0 = n.max_vertex_length();
    let mus: Vec<u32> = mu_range.collect();
    let records = mus
        .par_iter()
        .map(|&mu| -> Result<SweepRecord> {
            let gens = jets(mu);
            if gens.iter().any(Polynomial::is_zero) {
                return Ok(SweepRecord {
                    mu,
                    degenerate: true,
                    vertices: None,
                    contains_original: None,
                    equal: None,
                    first_difference: None,
                    truncated_equal_up_to: None,
                });
            }
            let n_mu = compute_standard_basis(&q.with_generators(gens))?.diagram().clone();
            let first_difference = n_mu.first_difference_length(n);
            Ok(SweepRecord {
                mu,
                degenerate: false,
                contains_original: Some(n.is_subset_of(&n_mu)),
                equal: Some(n_mu == *n),
                truncated_equal_up_to: first_difference.map(|d| d.saturating_sub(1)),
                first_difference,
                vertices: Some(n_mu),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut falsifications = Vec::new();
    for r in records.iter().filter(|r| !r.degenerate) {
        let mut fail = |claim: &str| falsifications.push(Falsification { mu: r.mu, claim: claim.into() });
        if r.mu >= l0 {
            if r.contains_original != Some(true) {
                fail("containment of the original diagram");
            }
            if r.first_difference.is_some_and(|d| d <= r.mu) {
                fail("agreement up to the jet order");
            }
        }
        if ctx.finite_complement.is_some_and(|b| r.mu >= b.mu0) && r.equal != Some(true) {
            fail("stabilization past the finite-complement bound");
        }
        if ctx.certified_mu0.is_some_and(|mu0| r.mu >= mu0) && r.equal != Some(true) {
            fail("stabilization past the determinacy bound");
        }
    }

    let mut stabilized_from = None;
    for r in records.iter().rev() {
        if r.equal == Some(true) {
            stabilized_from = Some(r.mu);
        } else {
            break;
        }
    }

    Ok(JetSweepReport {
        k: ctx.k,
        seed: ctx.seed,
        matrix: ctx.matrix,
        certified: ctx.certified_mu0.is_some(),
        diagram: n.clone(),
        l0,
        finite_complement: ctx.finite_complement,
        certified_mu0: ctx.certified_mu0,
        records,
        stabilized_from,
        falsifications,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    /// Added to each generator, in the original coordinates.
    pub tails: Vec<Polynomial>,
    pub certified: bool,
    pub diagram_equal: bool,
    pub hilbert_samuel_equal: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerturbationReport {
    pub mu: u32,
    pub seed: u64,
    pub bound: DeterminacyBound,
    /// Hilbert–Samuel values are compared for `η ≤ eta_max`.
    pub eta_max: u32,
    pub trials: Vec<TrialRecord>,
    pub passed_all: bool,
    /// Finite sampling supports the determinacy claim, it cannot prove it.
    pub evidence: &'static str,
}

/// A random tail: 1 to 4 terms of length in `[μ+1, μ+3]`, coefficients
/// `p/q` with `0 < |p| ≤ 5`, `1 ≤ q ≤ 5`.
pub fn random_tail<R: Rng>(m: usize, mu: u32, rng: &mut R) -> Polynomial {
    let mut tail = Polynomial::zero(m);
    for _ in 0..rng.gen_range(1..=4) {
        let len = rng.gen_range(mu + 1..=mu + 3);
        let choices = exponents_of_length(m, len);
        let e = choices[rng.gen_range(0..choices.len())].clone();
        let mut num = rng.gen_range(1..=5i64);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let den = rng.gen_range(1..=5i64);
        tail.add_term(e, rational(num, den));
    }
    tail
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64 + 1);
    rng
}

/// Perturb the generators above order `μ` and check that the perturbed
/// tuple is still certified in the same frame, with the same diagram and
/// the same Hilbert–Samuel function.
pub fn perturbation_trial(
    p: &IdealPresentation,
    k: usize,
    mu: u32,
    seed: u64,
    trials: usize,
) -> Result<PerturbationReport> {
    let bound = determinacy_bound(p, k, seed)?;
    if mu < bound.mu0 {
        return Err(Error::Precondition(format!("mu = {mu} is below the determinacy bound {}", bound.mu0)));
    }
    let n = bound.certificate.diagram.clone();
    let matrix = bound.certificate.matrix.clone();
    let eta_max = bound.evaluated.l2 + 4;
    let expected: Vec<u64> = (0..=u64::from(eta_max)).map(|eta| hs_function(&n, eta)).collect();
    let m = p.dim();

    let records = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialRecord> {
            let mut rng = trial_rng(seed, trial);
            let tails: Vec<Polynomial> = (0..k).map(|_| random_tail(m, mu, &mut rng)).collect();
            let gens = p.generators().iter().zip(&tails).map(|(f, t)| f + t).collect();
            let j = p.with_generators(gens);
            let jq = j.transform(&matrix)?;
            let nj = compute_standard_basis(&jq)?.diagram().clone();
            let certified = is_normalized(&jq, &nj, k)?;
            let diagram_equal = nj == n;
            let hilbert_samuel_equal = hs_oracle_table(&j, eta_max) == expected;
            Ok(TrialRecord {
                trial,
                tails,
                certified,
                diagram_equal,
                hilbert_samuel_equal,
                passed: certified && diagram_equal && hilbert_samuel_equal,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PerturbationReport {
        mu,
        seed,
        passed_all: records.iter().all(|r| r.passed),
        bound,
        eta_max,
        trials: records,
        evidence: "sampled",
    })
}

/// The pair `f₁ = x³y + Σ_{k≥4} x·y^k`, `f₂ = x²y³ + Σ_{j≥6} y^j`, whose
/// jet ideals keep a vertex `(1, μ+1)` that the ideal itself never has.
pub mod non_stabilizing {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }

    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }

    /// `j^μ f₁` and `j^μ f₂`.
    pub fn jets(mu: u32) -> Vec<Polynomial> {
        let mut f1 = &x().pow(3) * &y();
        for k in 4..mu {
            f1 = &f1 + &(&x() * &y().pow(k));
        }
        let mut f2 = &x().pow(2) * &y().pow(3);
        for j in 6..=mu {
            f2 = &f2 + &y().pow(j);
        }
        vec![f1.truncate(mu), f2.truncate(mu)]
    }

    /// `(1−y)·f₁, (1−y)·f₂`: polynomial generators of the same ideal, since
    /// `1 − y` is a unit.
    pub fn ideal() -> IdealPresentation {
        let g1 = &(&x().pow(3) * &y()) - &(&(&x().pow(3) * &y().pow(2)) - &(&x() * &y().pow(4)));
        let g2 = &(&(&x().pow(2) * &y().pow(3)) - &(&x().pow(2) * &y().pow(4))) + &y().pow(6);
        IdealPresentation::new(vec!["x".into(), "y".into()], vec![g1, g2]).expect("two variables")
    }

    #[derive(Debug, Clone, PartialEq, Eq, Serialize)]
    pub struct Row {
        pub mu: u32,
        pub jets: Vec<Polynomial>,
        pub vertices: Diagram,
        pub contains_marker: bool,
    }

    #[derive(Debug, Clone, PartialEq, Eq, Serialize)]
    pub struct Reproduction {
        pub mu: u32,
        /// `(1, μ+1)`.
        pub marker: Exponent,
        pub diagram: Diagram,
        pub marker_in_ideal: bool,
        /// Rows `μ, μ+2, …, μ+4`.
        pub rows: Vec<Row>,
        /// `(1, μ+1) ∈ N(I_μ)` and `∉ N(I_{μ'})` for the later rows.
        pub verified: bool,
    }

    pub fn diagram_of_jets(mu: u32) -> Result<Diagram> {
        let p = IdealPresentation::new(vec!["x".into(), "y".into()], jets(mu))?;
        Ok(compute_standard_basis(&p)?.diagram().clone())
    }

    pub fn reproduce(mu: u32) -> Result<Reproduction> {
        if mu < 5 {
            return Err(Error::Precondition(format!("mu = {mu} < 5")));
        }
        let marker = Exponent::from([1, mu + 1]);
        let diagram = compute_standard_basis(&ideal())?.diagram().clone();
        let rows = [mu, mu + 2, mu + 3, mu + 4]
            .par_iter()
            .map(|&nu| -> Result<Row> {
                let vertices = diagram_of_jets(nu)?;
                Ok(Row { mu: nu, jets: jets(nu), contains_marker: vertices.contains(&marker), vertices })
            })
            .collect::<Result<Vec<_>>>()?;
        let verified = rows[0].contains_marker && rows[1..].iter().all(|r| !r.contains_marker);
        Ok(Reproduction { mu, marker_in_ideal: diagram.contains(&marker), marker, diagram, rows, verified })
    }
}
