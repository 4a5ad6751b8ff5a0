//! The discriminant hypersurface of monic polynomials and its strata.
//!
//! A monic `P(t) = tⁿ + q1 tⁿ⁻¹ + … + qn` lies on the discriminant `𝒟` when it
//! has a multiple root, on `𝒟⁽ᵐ⁾` when it has two or more distinct multiple
//! roots and on `𝒟⁽ᶜ⁾` when it has a root of order at least three.
//!
//! [`decompose_discriminant`] splits the generic discriminant as
//!
//! ```text
//! Discr(P) = c·qn·q(n-2)³·Discr(P(n-2)) + qn·(q(n-1)·R1 + qn·R0) + q(n-1)²·S
//! ```
//!
//! with `P(n-2) = t⁻²(P - q(n-1) t - qn)` and `c = LEADING_CONSTANT = -4`.
//! The constant comes from `Discr(t² - z) = 4z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{discriminant, generic_discriminant, MPoly, QPoly, Rational, Vars};
use crate::error::AlgebraError;

/// Constant in front of `qn·q(n-2)³·Discr(P(n-2))`.
pub const LEADING_CONSTANT: i64 = -4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("the decomposition needs n >= 3, got n = {0}")]
    DegreeTooSmall(usize),
    #[error("the polynomial has no multiple root")]
    NotInDiscriminant,
    #[error("the scaling parameter must be nonzero")]
    ZeroScale,
    #[error("decomposition invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A rational point `(q1, …, qn)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonicPoint {
    q: Vec<Rational>,
}

impl MonicPoint {
    pub fn new(q: Vec<Rational>) -> Self {
        MonicPoint { q }
    }

    pub fn from_ints(q: &[i64]) -> Self {
        MonicPoint::new(
            q.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    /// The point whose polynomial is `∏ (t - rᵢ)^mᵢ`.
    pub fn from_roots(roots: &[(Rational, usize)]) -> Self {
        let p = roots.iter().fold(QPoly::one(), |acc, (r, m)| {
            acc.mul(&QPoly::linear(r).pow(*m as u32))
        });
        MonicPoint::from_polynomial(&p).expect("product of monic factors is monic")
    }

    /// Reads the coefficients of a monic polynomial of degree at least one.
    pub fn from_polynomial(p: &QPoly) -> Result<Self, StrataError> {
        let n = p.degree().unwrap_or(0);
        if n == 0 || !p.leading_coeff().is_one() {
            return Err(AlgebraError::NotMonic("t".into()).into());
        }
        Ok(MonicPoint::new((1..=n).map(|j| p.coeff(n - j)).collect()))
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn polynomial(&self) -> QPoly {
        let n = self.n();
        let mut coeffs: Vec<Rational> = (0..n).map(|i| self.q[n - 1 - i].clone()).collect();
        coeffs.push(Rational::one());
        QPoly::new(coeffs)
    }

    /// `Discr(P)` at this point.
    pub fn discriminant(&self) -> Rational {
        let p = self.polynomial().to_upoly("t");
        discriminant(&p)
            .expect("monic")
            .constant_value()
            .expect("rational coefficients")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointTag {
    Separable,
    SingleDouble,
    TwoOrMoreMultiple,
    TripleOrHigher,
}

/// Tag plus the full membership vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointClass {
    pub tag: PointTag,
    pub in_discriminant: bool,
    pub in_maxwell: bool,
    pub in_caustic: bool,
}

/// Classifies a point by `gcd(P, P')` and `gcd(P, P', P'')`.
///
/// `TripleOrHigher` wins over `TwoOrMoreMultiple` when both hold; the
/// membership flags report both.
pub fn classify_point(p: &MonicPoint) -> PointClass {
    let f = p.polynomial();
    let df = f.derivative();
    let g = f.gcd(&df);
    let dg = g.degree().unwrap_or(0);
    if dg == 0 {
        return PointClass {
            tag: PointTag::Separable,
            in_discriminant: false,
            in_maxwell: false,
            in_caustic: false,
        };
    }
    let triple = g.gcd(&df.derivative()).degree().unwrap_or(0) > 0;
    let distinct_multiple = g.radical().degree().unwrap_or(0);
    let squarefree_g = g.gcd(&g.derivative()).degree() == Some(0);
    let tag = if triple {
        PointTag::TripleOrHigher
    } else if dg == 1 {
        PointTag::SingleDouble
    } else {
        debug_assert!(squarefree_g);
        PointTag::TwoOrMoreMultiple
    };
    PointClass {
        tag,
        in_discriminant: true,
        in_maxwell: distinct_multiple >= 2,
        in_caustic: triple,
    }
}

/// The monic polynomial whose roots are the multiple roots of `P`, each once:
/// the fiber of the normalization `𝒟̂ → 𝒟` over the point.
pub fn normalization_fiber(p: &MonicPoint) -> Result<QPoly, StrataError> {
    let f = p.polynomial();
    let g = f.gcd(&f.derivative());
    if g.degree().unwrap_or(0) == 0 {
        return Err(StrataError::NotInDiscriminant);
    }
    Ok(g.radical())
}

/// `qj ↦ ξʲ qj`.
pub fn weighted_action(xi: &Rational, p: &MonicPoint) -> Result<MonicPoint, StrataError> {
    if xi.is_zero() {
        return Err(StrataError::ZeroScale);
    }
    let mut pow = Rational::one();
    let q =
        p.q.iter()
            .map(|c| {
                pow = &pow * xi;
                c * &pow
            })
            .collect();
    Ok(MonicPoint::new(q))
}

/// Whether some complex `ξ ≠ 0` carries `a` to `b` under [`weighted_action`].
///
/// Decided from the ratios `rⱼ = bⱼ/aⱼ` on the common support `J`: with
/// `d = gcd(J)` and a Bézout combination `d = Σ uⱼ j`, the candidate for `ξᵈ`
/// is `c = ∏ rⱼ^uⱼ`, and the orbit condition is `rⱼ = c^(j/d)` for all `j ∈ J`.
pub fn same_orbit(a: &MonicPoint, b: &MonicPoint) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut support = Vec::new();
    for (j, (x, y)) in a.q.iter().zip(&b.q).enumerate() {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => {}
            (false, false) => support.push((j as i64 + 1, y / x)),
            _ => return false,
        }
    }
    let Some(&(first, _)) = support.first() else {
        return true;
    };
    // running Bézout: d = u·j₁ + … over the support
    let mut d = BigInt::from(first);
    let mut c = support[0].1.clone();
    for (j, r) in support.iter().skip(1) {
        let e = BigInt::from(*j).extended_gcd(&d);
        // e.gcd = e.x·j + e.y·d
        c = pow_signed(r, &e.x) * pow_signed(&c, &e.y);
        d = e.gcd;
    }
    support.iter().all(|(j, r)| {
        let k = BigInt::from(*j) / &d;
        &pow_signed(&c, &k) == r
    })
}

fn pow_signed(r: &Rational, e: &BigInt) -> Rational {
    Pow::pow(r, e)
}

/// The decomposition of the degree-`n` generic discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataDecomposition {
    pub n: usize,
    pub r0: MPoly,
    pub r1: MPoly,
    pub s: MPoly,
    /// `LEADING_CONSTANT · qn · q(n-2)³ · Discr(P(n-2))`.
    pub leading: MPoly,
    pub reconstructed: MPoly,
}

impl StrataDecomposition {
    /// `c·qn·q(n-2)³·Discr(P(n-2)) + qn·(q(n-1)·R1 + qn·R0) + q(n-1)²·S`
    /// for an arbitrary constant `c`.
    pub fn rebuild_with(&self, c: &Rational) -> MPoly {
        let vars = self.r0.vars().clone();
        let lead = leading_monomial_part(self.n, &vars).scale(c);
        assemble(self.n, &vars, &lead, &self.r0, &self.r1, &self.s)
    }

    pub fn record(&self) -> DecompositionRecord {
        DecompositionRecord {
            n: self.n,
            r0: self.r0.to_string(),
            r1: self.r1.to_string(),
            s: self.s.to_string(),
        }
    }
}

/// `{n, R0, R1, S}` with polynomials as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub n: usize,
    #[serde(rename = "R0")]
    pub r0: String,
    #[serde(rename = "R1")]
    pub r1: String,
    #[serde(rename = "S")]
    pub s: String,
}

impl DecompositionRecord {
    /// Parses the polynomials back over `q1…qn`.
    pub fn parse(&self) -> Result<(MPoly, MPoly, MPoly), AlgebraError> {
        let vars = Vars::q(self.n);
        Ok((
            MPoly::parse(&self.r0, &vars)?,
            MPoly::parse(&self.r1, &vars)?,
            MPoly::parse(&self.s, &vars)?,
        ))
    }
}

fn qvar(vars: &Vars, j: usize) -> MPoly {
    MPoly::var(vars, &format!("q{j}")).expect("q-variable in universe")
}

/// `qn · q(n-2)³ · Discr(P(n-2))` over `q1…qn`.
fn leading_monomial_part(n: usize, vars: &Vars) -> MPoly {
    let inner = generic_discriminant(n - 2)
        .embed(vars)
        .expect("q1…q(n-2) is a prefix of q1…qn");
    let qn2 = if n >= 3 {
        qvar(vars, n - 2).pow(3)
    } else {
        MPoly::one(vars)
    };
    &(&qvar(vars, n) * &qn2) * &inner
}

fn assemble(n: usize, vars: &Vars, lead: &MPoly, r0: &MPoly, r1: &MPoly, s: &MPoly) -> MPoly {
    let qn = qvar(vars, n);
    let qn1 = qvar(vars, n - 1);
    let mid = &(&qn1 * r1) + &(&qn * r0);
    &(lead + &(&qn * &mid)) + &(&qn1.pow(2) * s)
}

/// Splits the generic discriminant by monomial partition.
///
/// The `qn`-free part must be divisible by `q(n-1)²` and gives `S`. The rest,
/// divided by `qn`, yields `qn·R0` (monomials with `qn`), `q(n-1)·R1`
/// (monomials with `q(n-1)`), and a remainder that must equal
/// `LEADING_CONSTANT · q(n-2)³ · Discr(P(n-2))`. Every step is checked.
pub fn decompose_discriminant(n: usize) -> Result<StrataDecomposition, StrataError> {
    if n < 3 {
        return Err(StrataError::DegreeTooSmall(n));
    }
    let vars = Vars::q(n);
    let disc = generic_discriminant(n);
    let qn_name = format!("q{n}");
    let qn1_name = format!("q{}", n - 1);

    let (with_qn, free) = disc.partition_by_divisibility(&qn_name, 1)?;
    let (sq, rest) = free.partition_by_divisibility(&qn1_name, 2)?;
    if !rest.is_zero() {
        return Err(StrataError::Invariant(format!(
            "qn-free part has terms not divisible by {qn1_name}^2: {rest}"
        )));
    }
    let s = sq.exact_divide(&qvar(&vars, n - 1).pow(2))?;

    let s1 = with_qn.exact_divide(&qvar(&vars, n))?;
    let (with_qn_again, rest) = s1.partition_by_divisibility(&qn_name, 1)?;
    let r0 = with_qn_again.exact_divide(&qvar(&vars, n))?;
    let (with_qn1, remainder) = rest.partition_by_divisibility(&qn1_name, 1)?;
    let r1 = with_qn1.exact_divide(&qvar(&vars, n - 1))?;

    let c = Rational::from_integer(LEADING_CONSTANT.into());
    let leading = leading_monomial_part(n, &vars).scale(&c);
    let expected_remainder = leading.exact_divide(&qvar(&vars, n))?;
    if remainder != expected_remainder {
        return Err(StrataError::Invariant(format!(
            "remainder {remainder} differs from {expected_remainder}"
        )));
    }

    let reconstructed = assemble(n, &vars, &leading, &r0, &r1, &s);
    if reconstructed != disc {
        return Err(StrataError::Invariant(
            "reconstruction differs from the discriminant".into(),
        ));
    }
    Ok(StrataDecomposition {
        n,
        r0,
        r1,
        s,
        leading,
        reconstructed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn cubic_decomposition() {
        let d = decompose_discriminant(3).unwrap();
        let v = Vars::q(3);
        assert_eq!(d.r0, MPoly::from_int(&v, -27));
        assert_eq!(d.r1, MPoly::parse("18*q1", &v).unwrap());
        assert_eq!(d.s, MPoly::parse("q1^2 - 4*q2", &v).unwrap());
        assert_eq!(d.leading, MPoly::parse("-4*q3*q1^3", &v).unwrap());
    }

    #[test]
    fn quartic_remainder() {
        let d = decompose_discriminant(4).unwrap();
        let v = Vars::q(4);
        assert_eq!(
            d.leading,
            MPoly::parse("-4*q4*q2^3*q1^2 + 16*q4*q2^4", &v).unwrap()
        );
    }

    #[test]
    fn small_degree_rejected() {
        assert_eq!(
            decompose_discriminant(2),
            Err(StrataError::DegreeTooSmall(2))
        );
    }

    #[test]
    fn point_tags() {
        let p = MonicPoint::from_ints(&[0, -3, 2]);
        assert_eq!(classify_point(&p).tag, PointTag::SingleDouble);
        let p = MonicPoint::from_ints(&[0, -2, 0, 1]);
        assert_eq!(classify_point(&p).tag, PointTag::TwoOrMoreMultiple);
        let p = MonicPoint::from_ints(&[0, 0, 0]);
        assert_eq!(classify_point(&p).tag, PointTag::TripleOrHigher);
        let p = MonicPoint::from_ints(&[0, -1]);
        assert_eq!(classify_point(&p).tag, PointTag::Separable);
    }

    #[test]
    fn fibers() {
        let f = normalization_fiber(&MonicPoint::from_ints(&[0, -3, 2])).unwrap();
        assert_eq!(f, QPoly::from_ints(&[-1, 1]));
        let f = normalization_fiber(&MonicPoint::from_ints(&[0, -2, 0, 1])).unwrap();
        assert_eq!(f, QPoly::from_ints(&[-1, 0, 1]));
        let f = normalization_fiber(&MonicPoint::from_ints(&[0, 0, 0])).unwrap();
        assert_eq!(f, QPoly::x());
        assert_eq!(
            normalization_fiber(&MonicPoint::from_ints(&[0, -1])),
            Err(StrataError::NotInDiscriminant)
        );
    }

    #[test]
    fn action_rule_and_orbits() {
        let p = MonicPoint::from_ints(&[1, 1, 1]);
        assert_eq!(
            weighted_action(&rat(2, 1), &p).unwrap(),
            MonicPoint::from_ints(&[2, 4, 8])
        );
        assert_eq!(weighted_action(&rat(1, 1), &p).unwrap(), p);
        assert_eq!(weighted_action(&rat(0, 1), &p), Err(StrataError::ZeroScale));
        let a = MonicPoint::from_ints(&[0, 3, 0, 5]);
        let b = weighted_action(&rat(-2, 3), &a).unwrap();
        assert!(same_orbit(&a, &b));
        // ξ² = 2 is allowed over ℂ
        let c = MonicPoint::from_ints(&[0, 6, 0, 20]);
        assert!(same_orbit(&a, &c));
        let d = MonicPoint::from_ints(&[0, 6, 0, 21]);
        assert!(!same_orbit(&a, &d));
        assert!(!same_orbit(&p, &MonicPoint::from_ints(&[1, 0, 1])));
    }
}
