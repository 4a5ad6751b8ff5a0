//! Closed forms of the derived classes, written out by hand as polynomials
//! in `n`, `g` and independent of the rewriting engine.
//!
//! The `variant_*` classes carry `+4(g - 1)φ` where the engine finds
//! `-4(g - 1)φ`; they are kept so the disagreement stays reproducible.

use crate::algebra::{rat, MPoly};
use crate::picard::class::{coeff_vars, BaseClass, CoeffNG};

fn p(s: &str) -> CoeffNG {
    MPoly::parse(s, &coeff_vars()).expect("valid literal")
}

/// `12λ - δ + k(g - 1)φ`.
fn hodge_minus_boundary(k: i64) -> BaseClass {
    BaseClass::from_coords(p("12"), p("-1"), p("g - 1").scale(&rat(k, 1)))
}

fn falling(k: u32) -> CoeffNG {
    (0..k).fold(p("1"), |acc, i| acc * p(&format!("n - {i}")))
}

/// `n(n-1)(12λ - δ - 2(g-1)φ)`.
pub fn psi_b_hat() -> BaseClass {
    hodge_minus_boundary(-2).scale(&falling(2))
}

/// `n(n-1)((n+1)(12λ - δ) - 2(g-1)(2n+1)φ)`.
pub fn boundary_class() -> BaseClass {
    BaseClass::from_coords(p("12*n + 12"), p("-n - 1"), p("g - 1") * p("-4*n - 2"))
        .scale(&falling(2))
}

/// `n(n-1)(n-2)(n-3)/2 · (12λ - δ - 4(g-1)φ)`.
pub fn maxwell_class() -> BaseClass {
    hodge_minus_boundary(-4).scale(&falling(4).scale(&rat(1, 2)))
}

/// `n(n-1)(n-2)(12λ - δ - 4(g-1)φ)`.
pub fn caustic_class() -> BaseClass {
    hodge_minus_boundary(-4).scale(&falling(3))
}

/// `n(n-1)((n² - n + 1)(12λ - δ) - 2(g-1)(2n² - 2n + 1)φ)`.
pub fn discriminant_class() -> BaseClass {
    let a = p("n^2 - n + 1");
    BaseClass::from_coords(a.scale(&rat(12, 1)), -a, p("g - 1") * p("-4*n^2 + 4*n - 2"))
        .scale(&falling(2))
}

fn half_boundary_plus_caustic() -> BaseClass {
    boundary_class().add(&caustic_class()).scale_rat(&rat(1, 2))
}

/// `-(n(n-1)/2)(12λ - δ - 2(g-1)φ) + (Db + Dc)/2`.
pub fn b_hat_squared() -> BaseClass {
    psi_b_hat()
        .scale_rat(&rat(-1, 2))
        .add(&half_boundary_plus_caustic())
}

/// `6n(3n-1)λ - 3n(n-1)(g-1)φ - (n(3n-1)/2)δ + (Db + Dc)/2`.
pub fn omega_squared() -> BaseClass {
    BaseClass::from_coords(
        p("18*n^2 - 6*n"),
        p("3*n^2 - n").scale(&rat(-1, 2)),
        p("-3*n^2 + 3*n") * p("g - 1"),
    )
    .add(&half_boundary_plus_caustic())
}

/// `n(2n² - 1)λ - (n(n-1)(4n+1)(g-1)/6)φ - (n(n² - 1)/6)δ`.
pub fn hodge_hat() -> BaseClass {
    BaseClass::from_coords(
        p("2*n^3 - n"),
        (falling(2) * p("n + 1")).scale(&rat(-1, 6)),
        (falling(2) * p("4*n + 1") * p("g - 1")).scale(&rat(-1, 6)),
    )
}

/// The Maxwell class with `+4(g - 1)φ`.
pub fn variant_maxwell() -> BaseClass {
    hodge_minus_boundary(4).scale(&falling(4).scale(&rat(1, 2)))
}

/// The caustic class with `+4(g - 1)φ`.
pub fn variant_caustic() -> BaseClass {
    hodge_minus_boundary(4).scale(&falling(3))
}
