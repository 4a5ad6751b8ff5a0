#![allow(dead_code)]

use std::collections::BTreeMap;

use hitchin_core::algebra::Rational;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    r(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// Roots of `tⁿ + q1 tⁿ⁻¹ + … + qn` as companion-matrix eigenvalues.
pub fn numeric_roots(q: &[f64]) -> Vec<Complex64> {
    let n = q.len();
    if n == 0 {
        return Vec::new();
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for (j, c) in q.iter().enumerate() {
        // last column holds -q_n … -q_1 from the top
        m[(n - 1 - j, n - 1)] = -c;
    }
    m.complex_eigenvalues().iter().copied().collect()
}

/// `∏_{i<j} (rᵢ - rⱼ)²`.
pub fn root_discriminant(roots: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::one();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = roots[i] - roots[j];
            acc *= d * d;
        }
    }
    acc
}

pub fn to_f64(q: &[Rational]) -> Vec<f64> {
    q.iter().map(|c| c.to_f64().expect("finite")).collect()
}

/// Multiplicities of equal values, largest first.
pub fn collision_profile(values: &[Rational]) -> Vec<usize> {
    let mut counts: BTreeMap<&Rational, usize> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_default() += 1;
    }
    let mut p: Vec<usize> = counts.into_values().collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

pub fn is_zero(x: &Rational) -> bool {
    x.is_zero()
}
