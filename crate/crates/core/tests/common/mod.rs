#![allow(dead_code)]

use inexp::determinacy::check_regular_sequence;
use inexp::poly::{exponents_of_length, integer, rational};
use inexp::{Diagram, Exponent, IdealPresentation, Polynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn names(m: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..m].iter().map(|s| s.to_string()).collect()
}

pub fn random_exponent<R: Rng>(m: usize, len: u32, rng: &mut R) -> Exponent {
    let all = exponents_of_length(m, len);
    all[rng.gen_range(0..all.len())].clone()
}

fn small_coeff<R: Rng>(rng: &mut R) -> inexp::Rational {
    let n = rng.gen_range(1..=3i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    if rng.gen_bool(0.2) {
        rational(n, rng.gen_range(2..=3))
    } else {
        integer(n)
    }
}

/// 1 to `max_terms` terms with lengths in `lengths`; never zero.
pub fn random_poly<R: Rng>(m: usize, lengths: std::ops::RangeInclusive<u32>, max_terms: usize, rng: &mut R) -> Polynomial {
    loop {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=max_terms) {
            let len = rng.gen_range(lengths.clone());
            terms.push((random_exponent(m, len, rng), small_coeff(rng)));
        }
        let f = Polynomial::from_terms(m, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// An ideal in `m ≤ 3` variables with at most 3 generators of degree at
/// most 4 and no constant terms.
pub fn random_ideal<R: Rng>(rng: &mut R) -> IdealPresentation {
    let m = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=3);
    let gens = (0..n).map(|_| random_poly(m, 1..=4, 4, rng)).collect();
    IdealPresentation::new(names(m), gens).unwrap()
}

/// A diagram in `D*_k(m)` with `m ≤ 4` and at most 6 vertices.
pub fn random_dk_star<R: Rng>(rng: &mut R) -> (Diagram, usize) {
    let m = rng.gen_range(2..=4);
    let k = rng.gen_range(1..m);
    let mut vertices: Vec<Exponent> = (0..k).map(|i| Exponent::axis(m, i, rng.gen_range(1..=4))).collect();
    let extra = rng.gen_range(0..=6 - k);
    while vertices.len() < k + extra {
        let e = Exponent::new((0..m).map(|_| rng.gen_range(0..=3)).collect());
        let on_tail_axis = e.axis_index().is_some_and(|i| i >= k);
        if !e.is_zero() && !on_tail_axis {
            vertices.push(e);
        }
    }
    (Diagram::from_exponents(m, vertices).unwrap(), k)
}

/// `k` generators in `m` variables: a low-order part plus a tail of higher
/// terms, so that jets genuinely truncate.
pub fn random_tuple<R: Rng>(m: usize, k: usize, rng: &mut R) -> Vec<Polynomial> {
    (0..k)
        .map(|_| loop {
            let head = random_poly(m, 1..=3, 3, rng);
            let tail = random_poly(m, 4..=7, 2, rng);
            let f = &head + &tail;
            if !f.is_zero() {
                break f;
            }
        })
        .collect()
}

/// A tuple certified regular by the normalization search.
pub struct CompleteIntersection {
    pub ideal: IdealPresentation,
    pub k: usize,
    pub seed: u64,
}

pub fn certified_complete_intersections(count: usize, seed: u64) -> Vec<CompleteIntersection> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    let mut draw = 0u64;
    while out.len() < count {
        draw += 1;
        assert!(draw < 50 * count as u64, "too few certified draws");
        let m = rng.gen_range(2..=3);
        let k = if m == 2 { 1 } else { rng.gen_range(1..=2) };
        let p = IdealPresentation::new(names(m), random_tuple(m, k, &mut rng)).unwrap();
        let cert = check_regular_sequence(&p, k, draw).unwrap();
        if cert.certified {
            out.push(CompleteIntersection { ideal: p, k, seed: draw });
        }
    }
    out
}

/// An ideal whose diagram has finite complement: a pure power of every
/// variable plus higher terms, and possibly one more generator.
pub fn random_finite_colength<R: Rng>(rng: &mut R) -> IdealPresentation {
    let m = rng.gen_range(1..=3);
    let mut gens: Vec<Polynomial> = (0..m)
        .map(|i| {
            let a = rng.gen_range(1..=3);
            let pure = Polynomial::monomial(Exponent::axis(m, i, a));
            &pure + &random_poly(m, a + 1..=a + 4, 2, rng)
        })
        .collect();
    if rng.gen_bool(0.5) {
        gens.push(random_poly(m, 2..=5, 3, rng));
    }
    IdealPresentation::new(names(m), gens).unwrap()
}
