mod common;

use common::{names, random_poly, rng};
use inexp::poly::rational;
use inexp::{format_polynomial, parse_polynomial, Error, Exponent, Polynomial};
use proptest::prelude::*;

fn vars(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn long_names_and_underscores() {
    let v = vars(&["alpha", "beta_2", "_t"]);
    let f = parse_polynomial("alpha^2*beta_2 - 3/4*_t + beta_2", &v).unwrap();
    assert_eq!(f.coeff(&Exponent::from([2, 1, 0])), rational(1, 1));
    assert_eq!(f.coeff(&Exponent::from([0, 0, 1])), rational(-3, 4));
    assert_eq!(parse_polynomial(&format_polynomial(&f, &v), &v).unwrap(), f);
}

#[test]
fn whitespace_is_ignored() {
    let v = names(2);
    assert_eq!(
        parse_polynomial("  x ^ 2 *  y -\t1 / 3 ", &v).unwrap(),
        parse_polynomial("x^2*y-1/3", &v).unwrap()
    );
}

#[test]
fn rationals_are_reduced() {
    let v = names(1);
    assert_eq!(parse_polynomial("6/4*x", &v).unwrap(), parse_polynomial("3/2*x", &v).unwrap());
    assert!(parse_polynomial("x - 2/2*x", &v).unwrap().is_zero());
}

#[test]
fn malformed_inputs() {
    let v = names(2);
    for bad in ["x +", "x * * y", "x^", "x^-1", "(x + y", "x + y)", "3 4", "x y", "1/-2", "#"] {
        assert!(matches!(parse_polynomial(bad, &v), Err(Error::Parse { .. })), "{bad:?} parsed");
    }
}

#[test]
fn zero_prints_as_zero() {
    assert_eq!(format_polynomial(&Polynomial::zero(2), &names(2)), "0");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn format_then_parse_is_identity(seed in any::<u64>(), m in 1usize..=4) {
        let f = random_poly(m, 0..=6, 6, &mut rng(seed));
        let v = names(m);
        let text = format_polynomial(&f, &v);
        prop_assert_eq!(parse_polynomial(&text, &v).unwrap(), f);
    }

    #[test]
    fn parse_agrees_with_arithmetic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let v = names(3);
        let f = random_poly(3, 0..=3, 3, &mut r);
        let g = random_poly(3, 0..=3, 3, &mut r);
        let (fs, gs) = (format_polynomial(&f, &v), format_polynomial(&g, &v));
        let product = parse_polynomial(&format!("({fs})*({gs})"), &v).unwrap();
        prop_assert_eq!(product, &f * &g);
        let difference = parse_polynomial(&format!("({fs}) - ({gs})"), &v).unwrap();
        prop_assert_eq!(difference, &f - &g);
        let square = parse_polynomial(&format!("({fs})^2"), &v).unwrap();
        prop_assert_eq!(square, f.pow(2));
    }

    #[test]
    fn garbage_never_panics(s in "[xy0-9+*/^() -]{0,24}") {
        let _ = parse_polynomial(&s, &names(2));
    }
}
