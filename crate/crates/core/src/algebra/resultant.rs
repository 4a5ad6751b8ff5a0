//! Resultants and discriminants.
//!
//! Sign convention: `Res(f, g) = det Sylvester(f, g)` with the rows of `f`
//! first, so `Res(t - a, t - b) = a - b` and
//! `Res(f, g) = lc(f)^deg(g) · ∏ g(αᵢ)` over the roots `αᵢ` of `f`.
//! For monic `f` of degree `m`, `Discr(f) = (-1)^(m(m-1)/2) · Res(f, f')`,
//! which gives `Discr(t² + q1 t + q2) = q1² - 4 q2`.
//!
//! Over multivariate coefficient rings the discriminant is instead taken as
//! the Hankel determinant `det(s_{i+j})` of the power sums of the roots,
//! expanded by minors without division. Both routes agree; the PRS route
//! swells badly on the generic polynomial beyond degree six.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::algebra::{MPoly, Rational, UPoly, Vars};
use crate::error::{AlgebraError, Result};

/// Resultant via the subresultant polynomial remainder sequence.
pub fn resultant(f: &UPoly, g: &UPoly) -> Result<MPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    if f.var() != g.var() {
        return Err(AlgebraError::MainVarMismatch(
            f.var().into(),
            g.var().into(),
        ));
    }
    let cv = f.coeff_vars().clone();
    let mut a = f.clone();
    let mut b = g.clone();
    let mut sign_flip = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign_flip = true;
        }
    }
    let mut big_g = MPoly::one(&cv);
    let mut h = MPoly::one(&cv);
    loop {
        let da = a.degree().unwrap();
        let Some(db) = b.degree() else {
            return Ok(MPoly::zero(&cv));
        };
        if db == 0 {
            // h^(1-da) · lc(b)^da
            let lb = b.leading_coeff();
            let res = if da == 0 {
                MPoly::one(&cv)
            } else {
                lb.pow(da as u32).exact_divide(&h.pow(da as u32 - 1))?
            };
            return Ok(if sign_flip { -res } else { res });
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let r = a.pseudo_rem(&b)?;
        let divisor = &big_g * &h.pow(delta as u32);
        a = b;
        b = r.exact_div_coeff(&divisor)?;
        big_g = a.leading_coeff();
        h = if delta == 0 {
            h
        } else {
            big_g
                .pow(delta as u32)
                .exact_divide(&h.pow(delta as u32 - 1))?
        };
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree k): `m + k` square.
pub fn sylvester_matrix(f: &UPoly, g: &UPoly) -> Result<Vec<Vec<MPoly>>> {
    let m = f.degree().ok_or(AlgebraError::ZeroInput)?;
    let k = g.degree().ok_or(AlgebraError::ZeroInput)?;
    let cv = f.coeff_vars().clone();
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for i in 0..k {
        let mut row = vec![MPoly::zero(&cv); size];
        for j in 0..=m {
            row[i + j] = f.coeff(m - j);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MPoly::zero(&cv); size];
        for j in 0..=k {
            row[i + j] = g.coeff(k - j);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Resultant as a Sylvester determinant, computed with fraction-free
/// (Bareiss) elimination. Independent of [`resultant`]; used to cross-check it.
pub fn sylvester_resultant(f: &UPoly, g: &UPoly) -> Result<MPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let cv = f.coeff_vars().clone();
    if f.degree() == Some(0) && g.degree() == Some(0) {
        return Ok(MPoly::one(&cv));
    }
    let mut a = sylvester_matrix(f, g)?;
    Ok(bareiss_det(&mut a, &cv))
}

fn bareiss_det(a: &mut [Vec<MPoly>], cv: &crate::algebra::Vars) -> MPoly {
    let n = a.len();
    if n == 0 {
        return MPoly::one(cv);
    }
    let mut sign = false;
    let mut prev = MPoly::one(cv);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return MPoly::zero(cv);
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_divide(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero(cv);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Discriminant of a monic polynomial of degree at least one.
pub fn discriminant(f: &UPoly) -> Result<MPoly> {
    let m = f.degree().ok_or(AlgebraError::ZeroInput)?;
    if !f.is_monic() {
        return Err(AlgebraError::NotMonic(f.var().to_string()));
    }
    let cv = f.coeff_vars().clone();
    if m == 0 {
        return Err(AlgebraError::ZeroInput);
    }
    if m == 1 {
        return Ok(MPoly::one(&cv));
    }
    if cv.len() >= 2 {
        return Ok(power_sum_discriminant(f));
    }
    let r = resultant(f, &f.derivative())?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Discriminant of the generic monic polynomial `tⁿ + q1 tⁿ⁻¹ + … + qn`,
/// over `Vars::q(n)`. Memoized.
///
/// Computed on the depressed polynomial (`q1 = 0`) and lifted back with the
/// derivation `Σ (n-k+1) q_{k-1} ∂/∂q_k` (with `q0 = 1`) that generates the
/// argument shift `t ↦ t + c`, under which the discriminant is invariant.
pub fn generic_discriminant(n: usize) -> MPoly {
    static CACHE: OnceLock<Mutex<HashMap<usize, MPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().expect("cache poisoned").get(&n) {
        return d.clone();
    }
    let d = generic_discriminant_uncached(n);
    cache.lock().expect("cache poisoned").insert(n, d.clone());
    d
}

fn generic_discriminant_uncached(n: usize) -> MPoly {
    let vars = Vars::q(n);
    if n <= 1 {
        return MPoly::one(&vars);
    }
    let zero = Rational::from_integer(0.into());
    let f = UPoly::generic_monic("t", n)
        .map_coeffs(&vars, |c| c.eval_var("q1", &zero))
        .expect("q1 is a coefficient variable");
    let d0 = power_sum_discriminant(&f);
    let q = |k: usize| MPoly::var(&vars, &format!("q{k}")).expect("in universe");
    let dq = |p: &MPoly, k: usize| p.derivative(&format!("q{k}")).expect("in universe");
    let q1 = q(1);
    let mut layers = vec![d0];
    let mut acc = layers[0].clone();
    let mut q1_pow = MPoly::one(&vars);
    for m in 0..2 * n - 2 {
        // n (m+1) D_{m+1} = -(n-1) ∂₂D_{m-1} - Σ_{k≥3} (n-k+1) q_{k-1} ∂_k D_m
        let mut rhs = MPoly::zero(&vars);
        if m >= 1 {
            rhs =
                &rhs + &dq(&layers[m - 1], 2).scale(&Rational::from_integer((n as i64 - 1).into()));
        }
        for k in 3..=n {
            let w = Rational::from_integer(((n - k + 1) as i64).into());
            rhs = &rhs + &(&q(k - 1) * &dq(&layers[m], k)).scale(&w);
        }
        let next = rhs.scale(&Rational::new((-1).into(), ((n * (m + 1)) as i64).into()));
        q1_pow = &q1_pow * &q1;
        acc = &acc + &(&q1_pow * &next);
        layers.push(next);
    }
    acc
}

/// Power sums `s_0 … s_{k}` of the roots of monic `f` (Newton's identities).
pub fn power_sums(f: &UPoly, k: usize) -> Vec<MPoly> {
    let m = f.degree().unwrap_or(0);
    let cv = f.coeff_vars().clone();
    // c[i] is the coefficient of t^(m-i)
    let c: Vec<MPoly> = (0..=m).map(|i| f.coeff(m - i)).collect();
    let mut s: Vec<MPoly> = Vec::with_capacity(k + 1);
    s.push(MPoly::from_int(&cv, m as i64));
    for j in 1..=k {
        let mut acc = if j <= m {
            c[j].scale(&Rational::from_integer((j as i64).into()))
        } else {
            MPoly::zero(&cv)
        };
        for i in 1..=j.min(m) {
            if i < j && !c[i].is_zero() {
                acc = &acc + &(&c[i] * &s[j - i]);
            }
        }
        s.push(-acc);
    }
    s
}

/// Discriminant of monic `f` as `det(s_{i+j})`, expanded along rows with all
/// leading minors memoized by column subset.
pub fn power_sum_discriminant(f: &UPoly) -> MPoly {
    let m = f.degree().unwrap_or(0);
    let cv = f.coeff_vars().clone();
    if m <= 1 {
        return MPoly::one(&cv);
    }
    let s = power_sums(f, 2 * m - 2);
    let mut minors: HashMap<u32, MPoly> = HashMap::new();
    minors.insert(0, MPoly::one(&cv));
    for row in 0..m {
        let mut next: HashMap<u32, MPoly> = HashMap::new();
        for (&mask, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            // sign of the column we add is fixed by how many chosen columns lie above it
            for col in 0..m {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = &s[row + col];
                if entry.is_zero() {
                    continue;
                }
                let above = (mask >> col).count_ones();
                let term = entry * minor;
                let term = if above % 2 == 1 { -term } else { term };
                let slot = next
                    .entry(mask | (1 << col))
                    .or_insert_with(|| MPoly::zero(&cv));
                *slot = &*slot + &term;
            }
        }
        minors = next;
    }
    minors
        .remove(&((1u32 << m) - 1))
        .unwrap_or_else(|| MPoly::zero(&cv))
}
