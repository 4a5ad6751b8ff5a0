use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, Rational, Vars};

/// A polynomial in the formal variables `n`, `g`.
pub type CoeffNG = MPoly;

pub fn coeff_vars() -> Vars {
    Vars::new(["n", "g"])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseSymbol {
    Lambda,
    Delta,
    Phi,
    LambdaHat,
}

impl BaseSymbol {
    pub const ALL: [BaseSymbol; 4] = [
        BaseSymbol::Lambda,
        BaseSymbol::Delta,
        BaseSymbol::Phi,
        BaseSymbol::LambdaHat,
    ];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BaseSymbol::Lambda => "λ",
            BaseSymbol::Delta => "δ",
            BaseSymbol::Phi => "φ",
            BaseSymbol::LambdaHat => "λ̂",
        }
    }

    /// ASCII label used in machine output.
    pub fn key(self) -> &'static str {
        match self {
            BaseSymbol::Lambda => "lambda",
            BaseSymbol::Delta => "delta",
            BaseSymbol::Phi => "phi",
            BaseSymbol::LambdaHat => "lambda_hat",
        }
    }
}

/// `a·λ + b·δ + c·φ + d·λ̂` with `a, b, c, d ∈ ℚ[n, g]`.
#[derive(Clone, PartialEq, Eq)]
pub struct BaseClass {
    coords: [CoeffNG; 4],
}

impl BaseClass {
    pub fn zero() -> Self {
        let z = MPoly::zero(&coeff_vars());
        BaseClass {
            coords: [z.clone(), z.clone(), z.clone(), z],
        }
    }

    pub fn basis(sym: BaseSymbol) -> Self {
        let mut out = BaseClass::zero();
        out.coords[sym.index()] = MPoly::one(&coeff_vars());
        out
    }

    /// Coordinates given as polynomial text in `n`, `g`, ordered `λ, δ, φ`.
    ///
    /// Panics on text outside the grammar; meant for literals.
    pub fn from_strs(lambda: &str, delta: &str, phi: &str) -> Self {
        let v = coeff_vars();
        let p = |s: &str| MPoly::parse(s, &v).expect("valid class coordinate");
        BaseClass::from_coords(p(lambda), p(delta), p(phi))
    }

    pub fn from_coords(lambda: CoeffNG, delta: CoeffNG, phi: CoeffNG) -> Self {
        let z = MPoly::zero(&coeff_vars());
        BaseClass {
            coords: [lambda, delta, phi, z],
        }
    }

    pub fn coord(&self, sym: BaseSymbol) -> &CoeffNG {
        &self.coords[sym.index()]
    }

    pub fn with_coord(mut self, sym: BaseSymbol, c: CoeffNG) -> Self {
        self.coords[sym.index()] = c;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MPoly::is_zero)
    }

    pub fn add(&self, o: &BaseClass) -> BaseClass {
        BaseClass {
            coords: std::array::from_fn(|i| &self.coords[i] + &o.coords[i]),
        }
    }

    pub fn sub(&self, o: &BaseClass) -> BaseClass {
        BaseClass {
            coords: std::array::from_fn(|i| &self.coords[i] - &o.coords[i]),
        }
    }

    pub fn scale(&self, c: &CoeffNG) -> BaseClass {
        BaseClass {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> BaseClass {
        BaseClass {
            coords: std::array::from_fn(|i| self.coords[i].scale(c)),
        }
    }

    /// Substitutes integer (or rational) values for `n` and `g`.
    pub fn specialize(&self, n: &Rational, g: &Rational) -> BaseClass {
        let vals = [n.clone(), g.clone()];
        let v = coeff_vars();
        BaseClass {
            coords: std::array::from_fn(|i| MPoly::constant(&v, self.coords[i].eval(&vals))),
        }
    }

    /// Nonzero coordinates in basis order.
    pub fn nonzero(&self) -> impl Iterator<Item = (BaseSymbol, &CoeffNG)> {
        BaseSymbol::ALL
            .into_iter()
            .zip(self.coords.iter())
            .filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, c) in self.nonzero() {
            let neg = c.len() == 1 && c.leading_coeff() < Rational::from_integer(0.into());
            let c = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", sym.symbol())?;
            } else if c.len() == 1 {
                write!(f, "{c}*{}", sym.symbol())?;
            } else {
                write!(f, "({c})*{}", sym.symbol())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseClass({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn vector_laws_and_display() {
        let a = BaseClass::from_strs("12*n", "-n", "0");
        let b = BaseClass::from_strs("1", "0", "2*g - 2");
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.to_string(), "12*n*λ - n*δ");
        assert_eq!(b.to_string(), "λ + (2*g - 2)*φ");
        assert_eq!(
            b.specialize(&rat(3, 1), &rat(4, 1)),
            BaseClass::from_strs("1", "0", "6")
        );
        assert!(BaseClass::zero().is_zero());
        assert_eq!(BaseClass::zero().to_string(), "0");
    }
}
