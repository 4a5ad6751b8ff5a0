//! Arithmetic in `ℚ[z]/(m(z))` for squarefree `m`, by dynamic evaluation.
//!
//! No factorization of `m` is attempted. Whenever a computation needs to know
//! whether a residue is zero and the answer differs between the factors of
//! `m`, it stops with a [`Split`]; [`dynamic`] then reruns it on both halves.

use std::cmp::Ordering;

use crate::algebra::{QPoly, Rational};
use crate::cover::CoverError;

/// The modulus factors as `left · right`, both of positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub left: QPoly,
    pub right: QPoly,
}

pub type Dyn<T> = Result<T, Split>;

/// `ℚ[z]/(m)` with `m` monic and squarefree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraicContext {
    modulus: QPoly,
}

impl AlgebraicContext {
    pub fn new(m: &QPoly) -> Result<Self, CoverError> {
        if m.degree().unwrap_or(0) == 0 {
            return Err(CoverError::ConstantModulus);
        }
        if m.gcd(&m.derivative()).degree() != Some(0) {
            return Err(CoverError::NotSquarefree(m.display("z")));
        }
        Ok(AlgebraicContext { modulus: m.monic() })
    }

    /// The residue field at a rational point, `ℚ[z]/(z - z0) ≅ ℚ`.
    pub fn at_point(z0: &Rational) -> Self {
        AlgebraicContext {
            modulus: QPoly::linear(z0),
        }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// `z0` when the modulus is `z - z0`.
    pub fn point(&self) -> Option<Rational> {
        (self.degree() == 1).then(|| -self.modulus.coeff(0))
    }

    pub fn reduce(&self, a: &QPoly) -> QPoly {
        a.rem(&self.modulus).expect("modulus is nonzero")
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&a.mul(b))
    }

    pub fn is_zero(&self, a: &QPoly) -> Dyn<bool> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Ok(true);
        }
        let g = self.modulus.gcd(&a);
        if g.degree() == Some(0) {
            Ok(false)
        } else {
            Err(self.split_by(&g))
        }
    }

    /// Inverse of a residue already known to be nonzero somewhere.
    pub fn inverse(&self, a: &QPoly) -> Dyn<QPoly> {
        let (g, s, _) = self.reduce(a).xgcd(&self.modulus);
        match g.degree() {
            Some(0) => Ok(self.reduce(&s)),
            _ if g == self.modulus || g.is_zero() => panic!("inverse of zero residue"),
            _ => Err(self.split_by(&g)),
        }
    }

    fn split_by(&self, g: &QPoly) -> Split {
        Split {
            left: g.monic(),
            right: self
                .modulus
                .exact_div(g)
                .expect("g divides the modulus")
                .monic(),
        }
    }
}

/// Runs `f` over `ℚ[z]/(m)`, splitting on zero divisors until every piece
/// gives an answer. Pieces come back in [`locus_cmp`] order.
pub fn dynamic<T, F>(ctx: &AlgebraicContext, f: F) -> Vec<(AlgebraicContext, T)>
where
    F: Fn(&AlgebraicContext) -> Dyn<T>,
{
    let mut work = vec![ctx.clone()];
    let mut out = Vec::new();
    while let Some(c) = work.pop() {
        match f(&c) {
            Ok(v) => out.push((c, v)),
            Err(Split { left, right }) => {
                work.push(AlgebraicContext { modulus: left });
                work.push(AlgebraicContext { modulus: right });
            }
        }
    }
    out.sort_by(|a, b| locus_cmp(a.0.modulus(), b.0.modulus()));
    out
}

/// Fixed order on monic loci: by degree, linear ones by their root, the
/// rest by coefficients from the top down.
pub fn locus_cmp(a: &QPoly, b: &QPoly) -> Ordering {
    let (da, db) = (a.degree(), b.degree());
    da.cmp(&db).then_with(|| {
        if da == Some(1) {
            let ra = -a.coeff(0) / a.coeff(1);
            let rb = -b.coeff(0) / b.coeff(1);
            ra.cmp(&rb)
        } else {
            a.coeffs().iter().rev().cmp(b.coeffs().iter().rev())
        }
    })
}

/// Polynomial in `t` with coefficients in `ℚ[z]/(m)`, low degree first.
/// Trailing coefficients may be zero residues until [`TPoly::trim`] is called.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    coeffs: Vec<QPoly>,
}

impl TPoly {
    pub fn new(ctx: &AlgebraicContext, coeffs: &[QPoly]) -> Self {
        TPoly {
            coeffs: coeffs.iter().map(|c| ctx.reduce(c)).collect(),
        }
    }

    pub fn one() -> Self {
        TPoly {
            coeffs: vec![QPoly::one()],
        }
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Degree of a trimmed polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn trim(mut self, ctx: &AlgebraicContext) -> Dyn<TPoly> {
        while let Some(c) = self.coeffs.last() {
            if ctx.is_zero(c)? {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        Ok(self)
    }

    pub fn monic(self, ctx: &AlgebraicContext) -> Dyn<TPoly> {
        let p = self.trim(ctx)?;
        let Some(lc) = p.coeffs.last() else {
            return Ok(p);
        };
        let inv = ctx.inverse(lc)?;
        Ok(p.scale(ctx, &inv))
    }

    pub fn scale(&self, ctx: &AlgebraicContext, c: &QPoly) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|a| ctx.mul(a, c)).collect(),
        }
    }

    pub fn derivative(&self, ctx: &AlgebraicContext) -> TPoly {
        TPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| ctx.reduce(&c.scale(&Rational::from_integer((i as i64).into()))))
                .collect(),
        }
    }

    pub fn sub(&self, ctx: &AlgebraicContext, o: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        TPoly {
            coeffs: (0..len)
                .map(|i| ctx.reduce(&self.coeff(i).sub(&o.coeff(i))))
                .collect(),
        }
    }

    pub fn mul(&self, ctx: &AlgebraicContext, o: &TPoly) -> TPoly {
        if self.is_zero() || o.is_zero() {
            return TPoly { coeffs: Vec::new() };
        }
        let mut out = vec![QPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TPoly {
            coeffs: out.iter().map(|c| ctx.reduce(c)).collect(),
        }
    }

    /// Quotient and remainder by a trimmed monic divisor.
    pub fn div_rem_monic(&self, ctx: &AlgebraicContext, d: &TPoly) -> (TPoly, TPoly) {
        let dd = d.degree().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (TPoly { coeffs: Vec::new() }, TPoly { coeffs: r });
        }
        let mut q = vec![QPoly::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = ctx.reduce(&r[k + dd]);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = ctx.reduce(&r[k + j].sub(&c.mul(dc)));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (TPoly { coeffs: q }, TPoly { coeffs: r })
    }

    /// Monic gcd by Euclid; splits whenever a leading coefficient is a zero
    /// divisor.
    pub fn gcd(&self, ctx: &AlgebraicContext, o: &TPoly) -> Dyn<TPoly> {
        let mut a = self.clone().monic(ctx)?;
        let mut b = o.clone().monic(ctx)?;
        while !b.is_zero() {
            let (_, r) = a.div_rem_monic(ctx, &b);
            a = b;
            b = r.monic(ctx)?;
        }
        Ok(a)
    }

    pub fn exact_div_monic(&self, ctx: &AlgebraicContext, d: &TPoly) -> Dyn<TPoly> {
        let (q, r) = self.div_rem_monic(ctx, d);
        let r = r.trim(ctx)?;
        assert!(r.is_zero(), "inexact division over the residue ring");
        q.trim(ctx)
    }

    pub fn eval(&self, ctx: &AlgebraicContext, v: &QPoly) -> QPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(QPoly::zero(), |acc, c| ctx.reduce(&acc.mul(v).add(c)))
    }

    /// Yun's decomposition of a monic polynomial: `(factor, multiplicity)`
    /// with multiplicities increasing.
    pub fn squarefree(&self, ctx: &AlgebraicContext) -> Dyn<Vec<(TPoly, usize)>> {
        let f = self.clone().monic(ctx)?;
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        let df = f.derivative(ctx);
        let a0 = f.gcd(ctx, &df)?;
        let mut b = f.exact_div_monic(ctx, &a0)?;
        let c = df.exact_div_monic(ctx, &a0)?;
        let mut d = c.sub(ctx, &b.derivative(ctx)).trim(ctx)?;
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(ctx, &d)?;
            b = b.exact_div_monic(ctx, &a)?;
            let c = d.exact_div_monic(ctx, &a)?;
            d = c.sub(ctx, &b.derivative(ctx)).trim(ctx)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }
}
