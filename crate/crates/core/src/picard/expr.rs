use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{MPoly, Rational};
use crate::picard::class::{coeff_vars, BaseSymbol, CoeffNG};
use crate::picard::derive::Stratum;
use crate::picard::PicardError;

/// Products of divisor symbols on a total space of relative dimension one
/// over the base: anything of degree above two vanishes for dimension reasons
/// once pushed forward, and is rejected outright.
pub const MAX_DEGREE: u32 = 2;

pub trait Monomial: Clone + Ord + fmt::Display {
    fn one() -> Self;
    fn degree(&self) -> u32;
    fn mul(&self, other: &Self) -> Self;
}

/// `ψᵃ · pull(α₁) ⋯` on the universal base curve.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberMonomial {
    pub psi: u32,
    /// Sorted.
    pub pulls: Vec<BaseSymbol>,
}

impl Monomial for FiberMonomial {
    fn one() -> Self {
        FiberMonomial {
            psi: 0,
            pulls: Vec::new(),
        }
    }

    fn degree(&self) -> u32 {
        self.psi + self.pulls.len() as u32
    }

    fn mul(&self, o: &Self) -> Self {
        let mut pulls = [self.pulls.clone(), o.pulls.clone()].concat();
        pulls.sort();
        FiberMonomial {
            psi: self.psi + o.psi,
            pulls,
        }
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, factors: &[String]) -> fmt::Result {
    if factors.is_empty() {
        write!(f, "1")
    } else {
        write!(f, "{}", factors.join("·"))
    }
}

fn powered(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

fn pull_names(pulls: &[BaseSymbol]) -> impl Iterator<Item = String> + '_ {
    pulls.iter().map(|s| format!("pull({})", s.symbol()))
}

impl fmt::Display for FiberMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = powered("ψ", self.psi)
            .into_iter()
            .chain(pull_names(&self.pulls))
            .collect();
        write_factors(f, &factors)
    }
}

/// Codimension-two cycles on the spectral universal curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cycle {
    /// `D̂` of one stratum: the locus over it inside `B̂`.
    Stratum(Stratum),
    /// The nodes of the singular fibers.
    Nodal,
}

/// `Ψᵃ · pull(α₁) ⋯ · B̂ᵇ`, times an optional codimension-two cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverMonomial {
    pub psi: u32,
    pub pulls: Vec<BaseSymbol>,
    pub b_hat: u32,
    pub cycle: Option<Cycle>,
}

impl Monomial for CoverMonomial {
    fn one() -> Self {
        CoverMonomial {
            psi: 0,
            pulls: Vec::new(),
            b_hat: 0,
            cycle: None,
        }
    }

    fn degree(&self) -> u32 {
        self.psi + self.pulls.len() as u32 + self.b_hat + 2 * self.cycle.is_some() as u32
    }

    /// Two cycles never meet in a nonzero product of degree ≤ 2, so keeping
    /// one slot is enough; the degree check rejects the rest.
    fn mul(&self, o: &Self) -> Self {
        let mut pulls = [self.pulls.clone(), o.pulls.clone()].concat();
        pulls.sort();
        CoverMonomial {
            psi: self.psi + o.psi,
            pulls,
            b_hat: self.b_hat + o.b_hat,
            cycle: self.cycle.or(o.cycle),
        }
    }
}

impl fmt::Display for CoverMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycle = self.cycle.map(|c| match c {
            Cycle::Stratum(s) => format!("D̂{}", s.suffix()),
            Cycle::Nodal => "V_nodal".to_string(),
        });
        let factors: Vec<String> = powered("Ψ", self.psi)
            .into_iter()
            .chain(pull_names(&self.pulls))
            .chain(powered("B̂", self.b_hat))
            .chain(cycle)
            .collect();
        write_factors(f, &factors)
    }
}

/// A `ℚ[n, g]`-combination of monomials of degree at most two.
#[derive(Clone, PartialEq, Eq)]
pub struct Expr<M: Monomial> {
    terms: BTreeMap<M, CoeffNG>,
}

pub type FiberExpr = Expr<FiberMonomial>;
pub type CoverExpr = Expr<CoverMonomial>;

impl<M: Monomial> Expr<M> {
    pub fn zero() -> Self {
        Expr {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(m: M, c: CoeffNG) -> Result<Self, PicardError> {
        if m.degree() > MAX_DEGREE {
            return Err(PicardError::DimensionExceeded(m.degree()));
        }
        let mut out = Expr::zero();
        out.push(m, c);
        Ok(out)
    }

    fn atom(m: M) -> Self {
        Expr::term(m, MPoly::one(&coeff_vars())).expect("atoms have degree ≤ 2")
    }

    pub fn one() -> Self {
        Expr::atom(M::one())
    }

    pub fn constant(c: CoeffNG) -> Self {
        Expr::term(M::one(), c).expect("degree zero")
    }

    fn push(&mut self, m: M, c: CoeffNG) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &CoeffNG)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &M) -> CoeffNG {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&coeff_vars()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.push(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&MPoly::from_int(&coeff_vars(), -1))
    }

    pub fn scale(&self, c: &CoeffNG) -> Self {
        let mut out = Expr::zero();
        for (m, a) in &self.terms {
            out.push(m.clone(), a * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&MPoly::constant(&coeff_vars(), c.clone()))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PicardError> {
        let mut out = Expr::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &o.terms {
                let m = ma.mul(mb);
                if m.degree() > MAX_DEGREE {
                    return Err(PicardError::DimensionExceeded(m.degree()));
                }
                out.push(m, a * b);
            }
        }
        Ok(out)
    }
}

impl FiberExpr {
    pub fn psi() -> Self {
        Expr::atom(FiberMonomial {
            psi: 1,
            pulls: Vec::new(),
        })
    }

    pub fn pull(sym: BaseSymbol) -> Self {
        Expr::atom(FiberMonomial {
            psi: 0,
            pulls: vec![sym],
        })
    }
}

impl CoverExpr {
    /// `Ψ = p*ψ`.
    pub fn psi() -> Self {
        Expr::atom(CoverMonomial {
            psi: 1,
            ..Monomial::one()
        })
    }

    pub fn pull(sym: BaseSymbol) -> Self {
        Expr::atom(CoverMonomial {
            pulls: vec![sym],
            ..Monomial::one()
        })
    }

    /// The ramification divisor of the spectral cover over the base curve.
    pub fn b_hat() -> Self {
        Expr::atom(CoverMonomial {
            b_hat: 1,
            ..Monomial::one()
        })
    }

    pub fn d_hat(s: Stratum) -> Self {
        Expr::atom(CoverMonomial {
            cycle: Some(Cycle::Stratum(s)),
            ..Monomial::one()
        })
    }

    pub fn v_nodal() -> Self {
        Expr::atom(CoverMonomial {
            cycle: Some(Cycle::Nodal),
            ..Monomial::one()
        })
    }

    /// `p*` of an expression on the base curve.
    pub fn pullback(e: &FiberExpr) -> Self {
        let mut out = Expr::zero();
        for (m, c) in e.terms() {
            out.push(
                CoverMonomial {
                    psi: m.psi,
                    pulls: m.pulls.clone(),
                    ..Monomial::one()
                },
                c.clone(),
            );
        }
        out
    }
}

impl<M: Monomial> fmt::Display for Expr<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})·{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<M: Monomial> fmt::Debug for Expr<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({self})")
    }
}
