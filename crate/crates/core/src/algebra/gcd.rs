//! GCDs and squarefree decomposition over ℚ[x₁…xₖ].
//!
//! Univariate GCDs are taken over the fraction field of the coefficient
//! ring: contents are units there and are discarded. Results are the
//! primitive associate whose leading coefficient has leading coefficient 1,
//! which is the monic GCD whenever that leading coefficient is a constant.

use crate::algebra::{MPoly, QPoly, UPoly};
use crate::error::{AlgebraError, Result};

fn normalize_mpoly(p: MPoly) -> MPoly {
    if p.is_zero() {
        return p;
    }
    let lc = p.leading_coeff();
    p.scale(&lc.recip())
}

fn normalize_upoly(p: UPoly) -> UPoly {
    if p.is_zero() {
        return p;
    }
    let lc = p.leading_coeff().leading_coeff();
    let cv = p.coeff_vars().clone();
    p.scale(&MPoly::constant(&cv, lc.recip()))
}

/// GCD of the coefficients of `p` (its content), normalized.
pub fn content(p: &UPoly) -> MPoly {
    let cv = p.coeff_vars();
    let mut g = MPoly::zero(cv);
    for c in p.coeffs() {
        g = mpoly_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn primitive_part(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p);
    p.exact_div_coeff(&c)
        .expect("content divides every coefficient")
}

/// Multivariate GCD over ℚ, normalized to leading coefficient 1.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return normalize_mpoly(b.clone());
    }
    if b.is_zero() {
        return normalize_mpoly(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.vars());
    }
    let vars = a.vars().clone();
    let main = vars
        .names()
        .iter()
        .find(|v| {
            a.degree_in(v).ok().flatten().unwrap_or(0) > 0
                || b.degree_in(v).ok().flatten().unwrap_or(0) > 0
        })
        .expect("non-constant polynomial has a variable")
        .clone();
    let ua = a.to_upoly(&main).expect("own variable");
    let ub = b.to_upoly(&main).expect("own variable");
    let ca = content(&ua);
    let cb = content(&ub);
    let c = mpoly_gcd(&ca, &cb);
    let g = primitive_gcd(&primitive_part(&ua), &primitive_part(&ub));
    let g = g.to_mpoly(&vars).expect("same universe");
    let c = c.embed(&vars).expect("sub-universe");
    normalize_mpoly(&c * &g)
}

/// GCD of primitive polynomials in `R[x]`, primitive but not normalized.
fn primitive_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.coeff_vars().is_empty() {
        let qa = QPoly::from_upoly(a).expect("constant coefficients");
        let qb = QPoly::from_upoly(b).expect("constant coefficients");
        return qa.gcd(&qb).to_upoly(a.var());
    }
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if b.is_zero() {
        return a;
    }
    loop {
        let r = a.pseudo_rem(&b).expect("nonzero divisor");
        if r.is_zero() {
            return b;
        }
        if r.degree() == Some(0) {
            return UPoly::constant(b.var(), MPoly::one(b.coeff_vars()));
        }
        a = b;
        b = primitive_part(&r);
    }
}

/// GCD in the main variable over the fraction field of the coefficient ring.
pub fn poly_gcd(f: &UPoly, g: &UPoly) -> Result<UPoly> {
    if f.var() != g.var() {
        return Err(AlgebraError::MainVarMismatch(
            f.var().into(),
            g.var().into(),
        ));
    }
    if f.coeff_vars() != g.coeff_vars() {
        return Err(AlgebraError::VarsMismatch {
            left: f.coeff_vars().names().join(","),
            right: g.coeff_vars().names().join(","),
        });
    }
    if f.is_zero() && g.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    if f.has_constant_coeffs() && g.has_constant_coeffs() {
        let qf = QPoly::from_upoly(f)?;
        let qg = QPoly::from_upoly(g)?;
        let h = qf.gcd(&qg);
        let cv = f.coeff_vars().clone();
        return Ok(UPoly::new(
            f.var(),
            &cv,
            h.coeffs()
                .iter()
                .map(|c| MPoly::constant(&cv, c.clone()))
                .collect(),
        ));
    }
    let pf = primitive_part(f);
    let pg = primitive_part(g);
    if pf.is_zero() {
        return Ok(normalize_upoly(pg));
    }
    if pg.is_zero() {
        return Ok(normalize_upoly(pf));
    }
    Ok(normalize_upoly(primitive_gcd(&pf, &pg)))
}

/// `f = unit · ∏ factorᵢ^multᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    /// Degree-zero part (an element of the coefficient ring).
    pub unit: MPoly,
    /// Squarefree, pairwise coprime factors with strictly increasing
    /// multiplicities.
    pub factors: Vec<(UPoly, usize)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> UPoly {
        let var = self
            .factors
            .first()
            .map(|(f, _)| f.var().to_string())
            .unwrap_or_else(|| "t".into());
        let mut acc = UPoly::constant(&var, self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.checked_mul(&f.pow(*m as u32)).expect("same ring");
        }
        acc
    }
}

/// Yun's iterated-GCD squarefree decomposition.
pub fn squarefree_decomposition(f: &UPoly) -> Result<SquarefreeDecomposition> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let cv = f.coeff_vars().clone();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition {
            unit: f.coeff(0),
            factors,
        });
    }
    let df = f.derivative();
    let a0 = poly_gcd(f, &df)?;
    let mut b = f.exact_div(&a0)?;
    let c = df.exact_div(&a0)?;
    let mut d = c.checked_sub(&b.derivative())?;
    let mut i = 1usize;
    while b.degree().unwrap_or(0) > 0 {
        let a = poly_gcd(&b, &d)?;
        b = b.exact_div(&a)?;
        let c = d.exact_div(&a)?;
        d = c.checked_sub(&b.derivative())?;
        if a.degree().unwrap_or(0) > 0 {
            factors.push((a, i));
        }
        i += 1;
    }
    let mut prod = UPoly::constant(f.var(), MPoly::one(&cv));
    for (g, m) in &factors {
        prod = prod.checked_mul(&g.pow(*m as u32))?;
    }
    let unit = f.exact_div(&prod)?;
    debug_assert_eq!(unit.degree(), Some(0));
    Ok(SquarefreeDecomposition {
        unit: unit.coeff(0),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vars;

    fn up(s: &str, var: &str, cv: &[&str]) -> UPoly {
        let all = Vars::new(std::iter::once(var).chain(cv.iter().copied()));
        MPoly::parse(s, &all).unwrap().to_upoly(var).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let f = up("t^2 - 1", "t", &[]);
        let g = up("t - 1", "t", &[]);
        assert_eq!(poly_gcd(&f, &g).unwrap(), g);
        let a = up("t^2 - z", "t", &["z"]);
        let b = up("t^2 - z - 1", "t", &["z"]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), up("1", "t", &["z"]));
        let h = up("3*t^2 + 6*t", "t", &[]);
        assert_eq!(poly_gcd(&h, &h).unwrap(), up("t^2 + 2*t", "t", &[]));
    }

    #[test]
    fn gcd_over_fraction_field_drops_content() {
        let a = up("z*t^2 - z^3", "t", &["z"]);
        let b = up("z*t + t - z^2 - z", "t", &["z"]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), up("t - z", "t", &["z"]));
    }

    #[test]
    fn mpoly_gcd_multivariate() {
        let v = Vars::new(["x", "y"]);
        let p = |s: &str| MPoly::parse(s, &v).unwrap();
        let g = p("x*y + 1");
        let a = &g * &p("x - y^2");
        let b = &g * &p("x^2 + 3");
        assert_eq!(mpoly_gcd(&a, &b), g);
        assert!(mpoly_gcd(&p("x"), &p("y")).is_one());
    }

    #[test]
    fn squarefree_over_function_field() {
        // (t - z)^2 (t + 1)^3 z
        let f = up("t - z", "t", &["z"])
            .pow(2)
            .checked_mul(&up("t + 1", "t", &["z"]).pow(3))
            .unwrap()
            .scale(&MPoly::parse("z", &Vars::new(["z"])).unwrap());
        let sq = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            sq.factors,
            vec![(up("t - z", "t", &["z"]), 2), (up("t + 1", "t", &["z"]), 3)]
        );
        assert_eq!(sq.reconstruct(), f);
    }

    #[test]
    fn squarefree_trivial_cases() {
        let f = up("z^2 + z", "z", &[]);
        assert_eq!(
            squarefree_decomposition(&f).unwrap().factors,
            vec![(f.clone(), 1)]
        );
        let c = up("z^3", "z", &[]);
        assert_eq!(
            squarefree_decomposition(&c).unwrap().factors,
            vec![(up("z", "z", &[]), 3)]
        );
    }
}
