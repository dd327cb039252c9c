//! Standard bases for the local degree ordering.
//!
//! Division in a local ordering need not terminate, so the normal form is
//! Mora's: reducers are chosen by minimal écart, and a partial remainder
//! whose écart is smaller than the chosen reducer's is itself added to the
//! reducer set. The result `r` satisfies `u·f = Σ aᵢ gᵢ + r` with `u` a unit
//! of the local ring, which is all the diagram needs.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{check_dim, Error, Result};
use crate::poly::{exponents_of_length, serialize_rational, Exponent, Matrix, Polynomial, Rational};

const REDUCTION_BUDGET: usize = 500_000;
const MORA_PROBE: usize = 400;
/// Steps allowed in a standalone normal form.
const NORMAL_FORM_BUDGET: usize = 2_000;
/// Largest coefficient, in bits, a normal form may pass through.
const COEFF_BITS_CAP: u64 = 4096;

/// Generators of an ideal in `ℚ[x₁..x_m]`, read in the local ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    m: usize,
    variables: Vec<String>,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    /// An empty generator list is the zero ideal.
    pub fn new(variables: Vec<String>, generators: Vec<Polynomial>) -> Result<Self> {
        let m = variables.len();
        for g in &generators {
            check_dim(m, g.dim())?;
            if g.is_zero() {
                return Err(Error::Precondition("zero generator".into()));
            }
        }
        Ok(IdealPresentation { m, variables, generators })
    }

    /// Variables named `x1, …, xm`.
    pub fn with_default_names(m: usize, generators: Vec<Polynomial>) -> Result<Self> {
        Self::new(default_names(m), generators)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn transform(&self, matrix: &Matrix) -> Result<IdealPresentation> {
        check_dim(self.m, matrix.size())?;
        if !matrix.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let generators = self.generators.iter().map(|g| g.substitute_linear(matrix)).collect();
        Ok(IdealPresentation { m: self.m, variables: self.variables.clone(), generators })
    }

    pub(crate) fn with_generators(&self, generators: Vec<Polynomial>) -> IdealPresentation {
        IdealPresentation { m: self.m, variables: self.variables.clone(), generators }
    }
}

pub(crate) fn default_names(m: usize) -> Vec<String> {
    match m {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=m).map(|i| format!("x{i}")).collect(),
    }
}

/// Where a reducer in a normal-form computation came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum ReducerRef {
    /// Index into the reducer list passed in.
    Input(usize),
    /// A partial remainder recorded at the given step.
    Intermediate(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub reducer: ReducerRef,
    pub shift: Exponent,
    #[serde(serialize_with = "serialize_rational")]
    pub coeff: Rational,
}

/// Witness of `unit · f = Σ cofactors[i] · reducers[i] + remainder` with
/// `unit(0) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormCertificate {
    pub unit: Polynomial,
    pub cofactors: Vec<Polynomial>,
    pub steps: Vec<ReductionStep>,
}

impl NormalFormCertificate {
    pub fn verify(&self, f: &Polynomial, reducers: &[Polynomial], remainder: &Polynomial) -> bool {
        if !self.unit.is_unit() || self.cofactors.len() != reducers.len() {
            return false;
        }
        let mut rhs = remainder.clone();
        for (a, g) in self.cofactors.iter().zip(reducers) {
            rhs = &rhs + &(a * g);
        }
        &self.unit * f == rhs
    }
}

/// `f` and each reducer as combinations `α·f + Σ βᵢ gᵢ`.
#[derive(Clone)]
struct Representation {
    alpha: Polynomial,
    beta: Vec<Polynomial>,
}

impl Representation {
    fn sub_mul_term(&mut self, shift: &Exponent, c: &Rational, other: &Representation) {
        self.alpha.sub_mul_term(shift, c, &other.alpha);
        for (b, ob) in self.beta.iter_mut().zip(&other.beta) {
            b.sub_mul_term(shift, c, ob);
        }
    }
}

struct Reducer {
    poly: Polynomial,
    inexp: Exponent,
    lc: Rational,
    ecart: u32,
    origin: ReducerRef,
    rep: Option<Representation>,
}

impl Reducer {
    fn new(poly: Polynomial, origin: ReducerRef, rep: Option<Representation>) -> Self {
        let inexp = poly.initial_exponent().expect("nonzero reducer").clone();
        let lc = poly.initial_coeff().unwrap().clone();
        let ecart = poly.ecart();
        Reducer { poly, inexp, lc, ecart, origin, rep }
    }
}

struct MoraOutcome {
    remainder: Polynomial,
    rep: Option<Representation>,
    steps: Vec<ReductionStep>,
}

fn mora_normal_form(f: &Polynomial, reducers: &[Polynomial], track: bool) -> Result<MoraOutcome> {
    let m = f.dim();
    for g in reducers {
        check_dim(m, g.dim())?;
    }
    let n = reducers.len();
    let mut set: Vec<Reducer> = reducers
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| {
            let rep = track.then(|| {
                let mut beta = vec![Polynomial::zero(m); n];
                beta[i] = Polynomial::one(m);
                Representation { alpha: Polynomial::zero(m), beta }
            });
            Reducer::new(g.clone(), ReducerRef::Input(i), rep)
        })
        .collect();

    let mut h = f.clone();
    let mut rep = track.then(|| Representation {
        alpha: Polynomial::one(m),
        beta: vec![Polynomial::zero(m); n],
    });
    let mut steps = Vec::new();
    let mut step_count = 0usize;

    while let Ok(lm) = h.initial_exponent() {
        let lm = lm.clone();
        let best = set
            .iter()
            .enumerate()
            .filter(|(_, r)| r.inexp.divides(&lm))
            .min_by_key(|(idx, r)| (r.ecart, *idx))
            .map(|(idx, _)| idx);
        let Some(idx) = best else { break };
        step_count += 1;
        if step_count > NORMAL_FORM_BUDGET {
            return Err(Error::ReductionBudget(NORMAL_FORM_BUDGET));
        }
        if set[idx].ecart > h.ecart() {
            set.push(Reducer::new(h.clone(), ReducerRef::Intermediate(step_count), rep.clone()));
        }
        let reducer = &set[idx];
        let shift = lm.checked_sub(&reducer.inexp).unwrap();
        let c = h.initial_coeff().unwrap() / &reducer.lc;
        h.sub_mul_term(&shift, &c, &reducer.poly);
        if let (Some(rep), Some(rrep)) = (rep.as_mut(), reducer.rep.as_ref()) {
            rep.sub_mul_term(&shift, &c, rrep);
        }
        if track {
            steps.push(ReductionStep { reducer: reducer.origin, shift, coeff: c });
        } else {
            h = h.primitive();
        }
        if h.max_coeff_bits() > COEFF_BITS_CAP {
            return Err(Error::CoefficientGrowth(COEFF_BITS_CAP));
        }
    }
    Ok(MoraOutcome { remainder: h, rep, steps })
}

/// Weak normal form of `f` with respect to `reducers`.
///
/// The remainder is zero or has an initial exponent outside
/// `⋃ inexp(g) + ℕ^m`, and `u·f − r` lies in the ideal of the reducers for
/// some unit `u`. Mora's process can wander through ever larger
/// intermediates; it is abandoned after a fixed number of steps or once a
/// coefficient outgrows a fixed bit length.
pub fn normal_form(f: &Polynomial, reducers: &[Polynomial]) -> Result<Polynomial> {
    Ok(mora_normal_form(f, reducers, false)?.remainder)
}

/// Same as [`normal_form`], also returning the unit, the cofactors and the
/// reduction trace.
pub fn normal_form_certified(
    f: &Polynomial,
    reducers: &[Polynomial],
) -> Result<(Polynomial, NormalFormCertificate)> {
    let out = mora_normal_form(f, reducers, true)?;
    let rep = out.rep.expect("tracked");
    let cert = NormalFormCertificate {
        unit: rep.alpha,
        cofactors: rep.beta.iter().map(|b| -b).collect(),
        steps: out.steps,
    };
    Ok((out.remainder, cert))
}

/// One processed S-pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionRecord {
    pub pair: (usize, usize),
    pub lcm: Exponent,
    /// Index of the basis element the pair produced, if it did not reduce
    /// to zero.
    pub added: Option<usize>,
    pub reduction_steps: usize,
}

/// A generating set whose initial exponents generate the diagram of the
/// ideal.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    basis: Vec<Polynomial>,
    diagram: Diagram,
    source: IdealPresentation,
    log: Vec<CompletionRecord>,
}

impl StandardBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn source(&self) -> &IdealPresentation {
        &self.source
    }

    pub fn log(&self) -> &[CompletionRecord] {
        &self.log
    }

    /// Exact membership in the localized ideal: adjoining `f` leaves the
    /// diagram unchanged.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_dim(self.source.dim(), f.dim())?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.diagram.is_everything() {
            return Ok(true);
        }
        let mut gens = self.basis.clone();
        gens.push(f.clone());
        let larger = compute_standard_basis(&self.source.with_generators(gens))?;
        Ok(larger.diagram == self.diagram)
    }
}

/// Complete the generators to a standard basis.
///
/// S-pairs are taken by sugar degree. Each S-polynomial is first reduced
/// inside one graded piece of the homogenization, where an element of écart
/// `e` may only reduce monomials of length at most `degree − e`; this always
/// terminates. A nonzero remainder is then passed to Mora's normal form with
/// a shared set of intermediate reducers, which can divide out units no
/// graded piece sees. Once the initial exponents leave a finite complement,
/// `𝔪^corner` lies in the ideal and terms of that length are dropped.
pub fn compute_standard_basis(p: &IdealPresentation) -> Result<StandardBasis> {
    standard_basis_within(p, REDUCTION_BUDGET)
}

/// [`compute_standard_basis`] with a cap on the total number of reduction
/// steps; exceeding it is [`Error::ReductionBudget`].
pub fn standard_basis_within(p: &IdealPresentation, budget: usize) -> Result<StandardBasis> {
    let mut c = Completion::new(p.dim(), budget);
    for g in p.generators() {
        c.add(g.clone());
    }
    c.update_corner();
    for j in 0..c.basis.len() {
        c.push_pairs(j);
    }
    let mut log = Vec::new();
    while let Some((degree, lcm, _, i, j)) = c.pairs.pop_first() {
        c.pending.remove(&(i, j));
        if c.redundant_pair(i, j, &lcm) {
            log.push(CompletionRecord { pair: (i, j), lcm, added: None, reduction_steps: 0 });
            continue;
        }
        let before = c.steps;
        let s = s_polynomial(&c.entry(i).poly, &c.entry(j).poly);
        let h = c.reduce_graded(s, degree)?;
        let h = c.reduce_local(h)?;
        let added = if h.is_zero() {
            None
        } else {
            c.add(h.primitive());
            let j_new = c.basis.len() - 1;
            let first_monomial = c.basis.len();
            c.update_corner();
            c.push_pairs(j_new);
            for k in first_monomial..c.basis.len() {
                c.push_pairs(k);
            }
            Some(j_new)
        };
        log.push(CompletionRecord { pair: (i, j), lcm, added, reduction_steps: c.steps - before });
    }
    let basis: Vec<Polynomial> = c.basis.iter().map(|&k| c.reducers[k].poly.clone()).collect();
    let diagram = Diagram::from_exponents(p.dim(), basis.iter().map(|g| g.initial_exponent().unwrap().clone()))?;
    Ok(StandardBasis { basis, diagram, source: p.clone(), log })
}

struct Entry {
    poly: Polynomial,
    lead: Exponent,
    ecart: u32,
}

impl Entry {
    fn new(poly: Polynomial) -> Self {
        let lead = poly.initial_exponent().expect("nonzero reducer").clone();
        let ecart = poly.ecart();
        Entry { poly, lead, ecart }
    }
}

struct Completion {
    m: usize,
    /// Basis elements and retained intermediate results, all in the ideal.
    reducers: Vec<Entry>,
    /// Positions of the basis elements in `reducers`.
    basis: Vec<usize>,
    corner: Option<u32>,
    steps: usize,
    budget: usize,
    pairs: BTreeSet<(u32, Exponent, usize, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    counter: usize,
}

impl Completion {
    fn new(m: usize, budget: usize) -> Self {
        Completion {
            m,
            reducers: Vec::new(),
            basis: Vec::new(),
            corner: None,
            steps: 0,
            budget,
            pairs: BTreeSet::new(),
            pending: HashSet::new(),
            counter: 0,
        }
    }

    fn entry(&self, i: usize) -> &Entry {
        &self.reducers[self.basis[i]]
    }

    fn add(&mut self, g: Polynomial) {
        self.basis.push(self.reducers.len());
        self.reducers.push(Entry::new(g));
    }

    fn push_pairs(&mut self, j: usize) {
        for i in 0..j {
            let (a, b) = (self.entry(i), self.entry(j));
            let lcm = a.lead.lcm(&b.lead);
            let degree = lcm.length() + a.ecart.max(b.ecart);
            self.pairs.insert((degree, lcm, self.counter, i, j));
            self.pending.insert((i, j));
            self.counter += 1;
        }
    }

    /// Product and chain criteria on the initial exponents; both hold for
    /// standard bases under a local order.
    fn redundant_pair(&self, i: usize, j: usize, lcm: &Exponent) -> bool {
        if self.corner.is_some_and(|d| lcm.length() >= d) || self.entry(i).lead.is_coprime(&self.entry(j).lead) {
            return true;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.entry(k).lead.divides(lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::ReductionBudget(self.budget));
        }
        Ok(())
    }

    fn best_reducer(&self, lm: &Exponent, max_ecart: u32) -> Option<usize> {
        (0..self.reducers.len())
            .filter(|&k| self.reducers[k].ecart <= max_ecart && self.reducers[k].lead.divides(lm))
            .min_by_key(|&k| (self.reducers[k].ecart, self.reducers[k].poly.len(), k))
    }

    fn reduce_step(&self, h: &mut Polynomial, k: usize) {
        let r = &self.reducers[k];
        let lm = h.initial_exponent().unwrap();
        let shift = lm.checked_sub(&r.lead).unwrap();
        let c = h.initial_coeff().unwrap() / r.poly.initial_coeff().unwrap();
        h.sub_mul_term_upto(&shift, &c, &r.poly, self.corner.map(|d| d - 1));
        *h = h.primitive();
    }

    /// Reduce `h`, read as a form of degree `degree`, within that form's
    /// graded piece.
    fn reduce_graded(&mut self, mut h: Polynomial, degree: u32) -> Result<Polynomial> {
        if let Some(d) = self.corner {
            h.truncate_in_place(d - 1);
        }
        while let Ok(lm) = h.initial_exponent() {
            let Some(k) = self.best_reducer(lm, degree - lm.length()) else { break };
            self.step()?;
            self.reduce_step(&mut h, k);
        }
        Ok(h)
    }

    /// Mora's normal form of `h`, keeping every intermediate result pushed as
    /// a reducer. Returns `h` unchanged if the probe runs out of steps or
    /// its coefficients grow too large.
    fn reduce_local(&mut self, h: Polynomial) -> Result<Polynomial> {
        let mut r = h.clone();
        for _ in 0..MORA_PROBE {
            let Ok(lm) = r.initial_exponent() else { return Ok(r) };
            let Some(k) = self.best_reducer(lm, u32::MAX) else { return Ok(r) };
            self.step()?;
            if self.reducers[k].ecart > r.ecart() {
                self.reducers.push(Entry::new(r.clone()));
            }
            self.reduce_step(&mut r, k);
            if r.max_coeff_bits() > COEFF_BITS_CAP {
                break;
            }
        }
        Ok(h)
    }

    /// Lower the corner if the initial exponents now have finite complement:
    /// truncate every reducer and adjoin the uncovered monomials of length
    /// `corner` to the basis.
    fn update_corner(&mut self) {
        let leads = Diagram::from_exponents(self.m, self.basis.iter().map(|&k| self.reducers[k].lead.clone()))
            .expect("leads share the ambient dimension");
        if !leads.has_finite_complement() {
            return;
        }
        let d = leads.complement().expect("finite").iter().map(Exponent::length).max().map_or(0, |l| l + 1);
        if self.corner.is_some_and(|c| c <= d) {
            return;
        }
        self.corner = Some(d);
        for e in &mut self.reducers {
            if e.lead.length() >= d {
                e.poly = Polynomial::monomial(e.lead.clone());
            } else {
                e.poly.truncate_in_place(d - 1);
            }
            e.ecart = e.poly.ecart();
        }
        for e in exponents_of_length(self.m, d) {
            if !leads.contains(&e) {
                self.add(Polynomial::monomial(e));
            }
        }
    }
}

/// The diagram of initial exponents `N(I)` of the localized ideal.
pub fn diagram_of(p: &IdealPresentation) -> Result<Diagram> {
    Ok(compute_standard_basis(p)?.diagram)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let a = f.initial_exponent().unwrap();
    let b = g.initial_exponent().unwrap();
    let l = a.lcm(b);
    let mut s = f.mul_term(&l.checked_sub(a).unwrap(), g.initial_coeff().unwrap());
    s.sub_mul_term(&l.checked_sub(b).unwrap(), f.initial_coeff().unwrap(), g);
    s
}

/// The representative of `f` supported in the complement of the diagram,
/// modulo `I + 𝔪^{bound+1}`.
///
/// In the truncated ring the division only ever moves upward through the
/// finitely many monomials of length `≤ bound`, so it terminates; the result
/// is the unique complement-supported polynomial of degree `≤ bound`
/// congruent to `f`. It is zero exactly when `f ∈ I + 𝔪^{bound+1}`.
pub fn reduce_to_complement(f: &Polynomial, basis: &StandardBasis, bound: u32) -> Result<Polynomial> {
    check_dim(basis.source.dim(), f.dim())?;
    let mut rest = f.truncate(bound);
    let mut out = Polynomial::zero(f.dim());
    let reducers: Vec<(&Polynomial, &Exponent, &Rational)> = basis
        .basis
        .iter()
        .map(|g| (g, g.initial_exponent().unwrap(), g.initial_coeff().unwrap()))
        .collect();
    loop {
        let Some((e, c)) = rest.terms().next().map(|(e, c)| (e.clone(), c.clone())) else {
            break;
        };
        match reducers.iter().find(|(_, inexp, _)| inexp.divides(&e)) {
            Some((g, inexp, lc)) => {
                let shift = e.checked_sub(inexp).unwrap();
                rest.sub_mul_term(&shift, &(&c / *lc), g);
                rest = rest.truncate(bound);
            }
            None => {
                out.add_term(e.clone(), c.clone());
                rest.add_term(e, -c);
            }
        }
    }
    Ok(out)
}

/// `I(0)`: generators evaluated at `x_{k+1} = … = x_m = 0`, zeros dropped.
pub fn evaluated_ideal(p: &IdealPresentation, k: usize) -> Result<IdealPresentation> {
    if k == 0 || k >= p.dim() {
        return Err(Error::KOutOfRange { k, m: p.dim() });
    }
    let mut gens = Vec::new();
    for g in p.generators() {
        let e = g.evaluate_at_zero(k)?;
        if !e.is_zero() {
            gens.push(e);
        }
    }
    IdealPresentation::new(p.variables()[..k].to_vec(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::integer;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }
    fn ideal(gens: Vec<Polynomial>) -> IdealPresentation {
        let m = gens[0].dim();
        IdealPresentation::with_default_names(m, gens).unwrap()
    }
    fn d2(v: &[[u32; 2]]) -> Diagram {
        Diagram::from_exponents(2, v.iter().map(|e| Exponent::from(*e))).unwrap()
    }

    #[test]
    fn single_division_step() {
        let cusp = &x().pow(2) - &y().pow(3);
        let r = normal_form(&x().pow(2), std::slice::from_ref(&cusp)).unwrap();
        assert_eq!(r, y().pow(3));
        assert!(normal_form(&cusp, std::slice::from_ref(&cusp)).unwrap().is_zero());
        let one = Polynomial::one(2);
        assert_eq!(normal_form(&one, &[x()]).unwrap(), one);
    }

    #[test]
    fn certificate_checks_out() {
        let gens = vec![&(&x().pow(2) - &y().pow(3)) + &x().pow(4), &x() * &y()];
        let f = &y().pow(5) + &(&x().pow(3) * &y());
        let (r, cert) = normal_form_certified(&f, &gens).unwrap();
        assert!(cert.verify(&f, &gens, &r));
        assert!(!cert.steps.is_empty());
    }

    #[test]
    fn unit_multiple_reduces_to_zero() {
        // (1 + y)·x lies in (x) locally; the remainder must vanish
        let g = &x() * &(&Polynomial::one(2) + &y());
        let (r, cert) = normal_form_certified(&x(), std::slice::from_ref(&g)).unwrap();
        assert!(r.is_zero());
        assert!(cert.verify(&x(), &[g], &r));
    }

    #[test]
    fn principal_ideal() {
        let sb = compute_standard_basis(&ideal(vec![&x().pow(2) - &y().pow(3)])).unwrap();
        assert_eq!(sb.basis().len(), 1);
        assert_eq!(sb.diagram(), &d2(&[[2, 0]]));
    }

    #[test]
    fn cusp_with_xy() {
        let p = ideal(vec![&x().pow(2) - &y().pow(3), &x() * &y()]);
        let sb = compute_standard_basis(&p).unwrap();
        assert_eq!(sb.diagram(), &d2(&[[2, 0], [1, 1], [0, 4]]));
        assert_eq!(sb.diagram().complement().unwrap().len(), 5);
        assert!(sb.contains(&y().pow(4)).unwrap());
        assert!(!sb.contains(&y().pow(3)).unwrap());
    }

    #[test]
    fn truncated_jets_of_the_non_stabilizing_pair() {
        // 5-jets: y²·f1 − x·f2 = x·y⁶
        let f1 = &(&x().pow(3) * &y()) + &(&x() * &y().pow(4));
        let f2 = &x().pow(2) * &y().pow(3);
        let sb = compute_standard_basis(&ideal(vec![f1.clone(), f2])).unwrap();
        assert!(sb.diagram().contains(&Exponent::from([1, 6])));
        // with the next term of f2 present the combination cancels instead
        let f2 = &(&x().pow(2) * &y().pow(3)) + &y().pow(6);
        let sb = compute_standard_basis(&ideal(vec![f1, f2])).unwrap();
        assert!(!sb.diagram().contains(&Exponent::from([1, 6])));
    }

    #[test]
    fn monomial_generators_are_fixed() {
        let gens = vec![x().pow(3), &x() * &y().pow(2), y().pow(4)];
        let sb = compute_standard_basis(&ideal(gens.clone())).unwrap();
        assert_eq!(sb.basis(), gens.as_slice());
        assert_eq!(sb.diagram(), &d2(&[[3, 0], [1, 2], [0, 4]]));
    }

    #[test]
    fn unit_generator_gives_everything() {
        let g = &Polynomial::one(2) + &x();
        let sb = compute_standard_basis(&ideal(vec![g, y().pow(2)])).unwrap();
        assert!(sb.diagram().is_everything());
        assert_eq!(sb.diagram().phi(5), 0);
    }

    #[test]
    fn complement_reduction() {
        let sb = compute_standard_basis(&ideal(vec![&x().pow(2) - &y().pow(3)])).unwrap();
        assert_eq!(reduce_to_complement(&x().pow(2), &sb, 6).unwrap(), y().pow(3));
        let sb2 = compute_standard_basis(&ideal(vec![&x().pow(2) - &y().pow(3), &x() * &y()])).unwrap();
        assert!(reduce_to_complement(&y().pow(4), &sb2, 8).unwrap().is_zero());
        let sb3 = compute_standard_basis(&ideal(vec![x().pow(2)])).unwrap();
        let f = &Polynomial::one(2) + &x();
        assert_eq!(reduce_to_complement(&f, &sb3, 4).unwrap(), f);
    }

    #[test]
    fn evaluation_of_ideals() {
        let z = Polynomial::var(3, 2);
        let x3 = Polynomial::var(3, 0);
        let y3 = Polynomial::var(3, 1);
        let p = IdealPresentation::with_default_names(3, vec![&x3.pow(2) - &(&y3.pow(3) * &z), &x3 * &y3]).unwrap();
        let e = evaluated_ideal(&p, 1).unwrap();
        assert_eq!(e.generators(), &[Polynomial::var(1, 0).pow(2)]);
        assert_eq!(e.variables(), &["x".to_string()]);

        let f1 = &(&x().pow(3) * &y()) + &(&x() * &y().pow(4));
        let f2 = &(&x().pow(2) * &y().pow(3)) + &y().pow(6);
        let e = evaluated_ideal(&ideal(vec![f1, f2]), 1).unwrap();
        assert!(e.generators().is_empty());
        assert!(compute_standard_basis(&e).unwrap().diagram().is_empty());

        let e = evaluated_ideal(&ideal(vec![&x() + &y()]), 1).unwrap();
        assert_eq!(e.generators(), &[Polynomial::var(1, 0)]);
    }

    #[test]
    fn scaling_and_reordering_do_not_change_the_diagram() {
        let a = &x().pow(2) - &y().pow(3);
        let b = &(&x() * &y()) + &y().pow(5);
        let d1 = diagram_of(&ideal(vec![a.clone(), b.clone()])).unwrap();
        let d2 = diagram_of(&ideal(vec![b.scale(&integer(-7)), a.scale(&integer(3))])).unwrap();
        assert_eq!(d1, d2);
    }
}
