mod common;

use common::*;
use hitchin_core::algebra::{discriminant, generic_discriminant, MPoly, Rational, UPoly, Vars};
use hitchin_core::strata::MonicPoint;
use num_traits::ToPrimitive;

fn check(q: &[Rational]) {
    let exact = MonicPoint::new(q.to_vec()).discriminant();
    let numeric = root_discriminant(&numeric_roots(&to_f64(q)));
    let e = exact.to_f64().unwrap();
    let err = (numeric.re - e).hypot(numeric.im);
    // relative error; a vanishing discriminant gets an absolute floor
    let bound = if exact == r(0, 1) {
        1e-9
    } else {
        1e-6 * e.abs()
    };
    assert!(err <= bound, "q = {q:?}: exact {e}, numeric {numeric}");
}

#[test]
fn random_points_agree_with_roots() {
    let mut g = rng(7);
    let mut checked = 0;
    for n in 1..=6 {
        for _ in 0..40 {
            let q: Vec<Rational> = (0..n).map(|_| small_rational(&mut g)).collect();
            check(&q);
            checked += 1;
        }
    }
    assert_eq!(checked, 240);
}

#[test]
fn generic_matches_direct_evaluation() {
    let mut g = rng(11);
    for n in 2..=5 {
        let q: Vec<Rational> = (0..n).map(|_| small_rational(&mut g)).collect();
        let mut coeffs: Vec<Rational> = q.iter().rev().cloned().collect();
        coeffs.push(r(1, 1));
        let direct = discriminant(&UPoly::from_rationals("t", &coeffs)).unwrap();
        assert_eq!(
            direct.constant_value().unwrap(),
            generic_discriminant(n).eval(&q)
        );
    }
}

#[test]
fn known_small_discriminants() {
    assert_eq!(generic_discriminant(1).to_string(), "1");
    assert_eq!(generic_discriminant(2).to_string(), "q1^2 - 4*q2");
    let cubic = MPoly::parse(
        "q1^2*q2^2 - 4*q1^3*q3 - 4*q2^3 + 18*q1*q2*q3 - 27*q3^2",
        &Vars::q(3),
    )
    .unwrap();
    assert_eq!(generic_discriminant(3), cubic);
}
