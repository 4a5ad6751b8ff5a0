use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{discriminant, MPoly, QPoly, UPoly, Vars};
use crate::cover::CoverError;

/// `F(t, z) = tⁿ + q1(z) tⁿ⁻¹ + … + qn(z)` on one affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralFamily {
    coeffs: Vec<QPoly>,
    base_genus: Option<i64>,
}

/// On-disk form: `{"n": 3, "coeffs": ["0", "0", "-z"], "g": 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub n: usize,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<i64>,
}

fn zvars() -> Vars {
    Vars::new(["z"])
}

impl SpectralFamily {
    pub fn new(coeffs: Vec<QPoly>, base_genus: Option<i64>) -> Result<Self, CoverError> {
        if coeffs.len() < 2 {
            return Err(CoverError::TooFewSheets(coeffs.len()));
        }
        Ok(SpectralFamily { coeffs, base_genus })
    }

    /// Coefficients `q1 … qn` as polynomial text in `z`.
    pub fn parse(coeffs: &[&str], base_genus: Option<i64>) -> Result<Self, CoverError> {
        let vars = zvars();
        let qs = coeffs
            .iter()
            .map(|s| QPoly::from_mpoly(&MPoly::parse(s, &vars)?, "z"))
            .collect::<Result<Vec<_>, _>>()?;
        SpectralFamily::new(qs, base_genus)
    }

    pub fn from_spec(spec: &FamilySpec) -> Result<Self, CoverError> {
        if spec.coeffs.len() != spec.n {
            return Err(CoverError::CoefficientCount {
                expected: spec.n,
                got: spec.coeffs.len(),
            });
        }
        let strs: Vec<&str> = spec.coeffs.iter().map(String::as_str).collect();
        SpectralFamily::parse(&strs, spec.g)
    }

    pub fn spec(&self) -> FamilySpec {
        FamilySpec {
            n: self.n(),
            coeffs: self.coeffs.iter().map(|c| c.display("z")).collect(),
            g: self.base_genus,
        }
    }

    /// `∏ (t - rᵢ(z))`.
    pub fn from_roots(roots: &[QPoly], base_genus: Option<i64>) -> Result<Self, CoverError> {
        // elementary symmetric functions, built up one root at a time
        let mut e: Vec<QPoly> = vec![QPoly::one()];
        for r in roots {
            let mut next = e.clone();
            next.push(QPoly::zero());
            for j in 1..next.len() {
                next[j] = next[j].sub(&e[j - 1].mul(r));
            }
            e = next;
        }
        SpectralFamily::new(e[1..].to_vec(), base_genus)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// `q1 … qn`.
    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn base_genus(&self) -> Option<i64> {
        self.base_genus
    }

    /// Coefficients of `F` in `t`, low degree first, ending with `1`.
    pub fn t_coeffs(&self) -> Vec<QPoly> {
        let mut out: Vec<QPoly> = self.coeffs.iter().rev().cloned().collect();
        out.push(QPoly::one());
        out
    }

    /// `F` as a polynomial in `t` over `ℚ[z]`.
    pub fn polynomial(&self) -> UPoly {
        let vars = zvars();
        let coeffs = self
            .t_coeffs()
            .iter()
            .map(|c| c.to_mpoly(&vars, "z").expect("z in universe"))
            .collect();
        UPoly::new("t", &vars, coeffs)
    }

    /// The family after `t ↦ t + v(z)`.
    pub fn shifted(&self, v: &QPoly) -> SpectralFamily {
        let vars = zvars();
        let all = Vars::new(["t", "z"]);
        let shift = (&MPoly::var(&all, "t").unwrap()
            + &v.to_mpoly(&vars, "z").unwrap().embed(&all).unwrap())
            .to_upoly("t")
            .unwrap();
        let f = self
            .polynomial()
            .substitute("t", &shift)
            .expect("same ring");
        let n = self.n();
        let coeffs = (1..=n)
            .map(|j| QPoly::from_mpoly(&f.coeff(n - j), "z").expect("univariate in z"))
            .collect();
        SpectralFamily {
            coeffs,
            base_genus: self.base_genus,
        }
    }

    /// `2n(n-1)(g-1)`, the number of zeros of `W` on a closed genus-`g`
    /// base, when a genus is attached. Chart data cannot confirm it.
    pub fn expected_zero_count(&self) -> Option<BigInt> {
        let n = BigInt::from(self.n());
        self.base_genus
            .map(|g| BigInt::from(2) * &n * (&n - 1) * (BigInt::from(g) - 1))
    }
}

/// `W(z) = Discr_t F(t, z)`.
pub fn discriminant_family(fam: &SpectralFamily) -> QPoly {
    let w = discriminant(&fam.polynomial()).expect("monic of degree at least two");
    QPoly::from_mpoly(&w, "z").expect("univariate in z")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_discriminants() {
        let f = SpectralFamily::parse(&["0", "-z"], None).unwrap();
        assert_eq!(discriminant_family(&f), QPoly::from_ints(&[0, 4]));
        let f = SpectralFamily::parse(&["0", "0", "-z"], None).unwrap();
        assert_eq!(discriminant_family(&f), QPoly::from_ints(&[0, 0, -27]));
    }

    #[test]
    fn roots_constructor_and_shift() {
        let z = QPoly::x();
        let f = SpectralFamily::from_roots(&[z.clone(), z.clone().neg()], None).unwrap();
        assert_eq!(f, SpectralFamily::parse(&["0", "-z^2"], None).unwrap());
        let g = f.shifted(&QPoly::from_ints(&[1, 1]));
        assert_eq!(discriminant_family(&g), discriminant_family(&f));
        assert_eq!(g.coeffs()[0], QPoly::from_ints(&[2, 2]));
    }

    #[test]
    fn family_file_round_trip() {
        let f = SpectralFamily::parse(&["-2", "1 - 2*z", "2*z", "z^2 - z"], Some(2)).unwrap();
        let back = SpectralFamily::from_spec(&f.spec()).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.expected_zero_count(), Some(BigInt::from(24)));
    }
}
