//! Dense univariate polynomials over ℚ (the field case).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{MPoly, Rational, UPoly, Vars};
use crate::error::{AlgebraError, Result};

/// `Σ coeffs[i] x^i`, trimmed so the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn x() -> Self {
        QPoly::from_ints(&[0, 1])
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        QPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().recip();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if sd < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let inv = d.leading_coeff().recip();
        let mut q = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[i + k] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((QPoly::new(q), QPoly::new(r)))
    }

    pub fn rem(&self, d: &QPoly) -> Result<QPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn exact_div(&self, d: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NotDivisible)
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn xgcd(&self, o: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading_coeff().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Order of vanishing at a rational point (`None` for the zero polynomial).
    pub fn order_at(&self, x: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = QPoly::linear(x);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin).expect("nonzero");
            if !r.is_zero() {
                return Some(k);
            }
            p = q;
            k += 1;
        }
    }

    /// Yun's algorithm: `self = lc · ∏ fᵢ^mᵢ` with monic, squarefree,
    /// pairwise coprime `fᵢ` and strictly increasing `mᵢ`.
    pub fn squarefree(&self) -> (Rational, Vec<(QPoly, usize)>) {
        let lc = self.leading_coeff();
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return (lc, out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = df.exact_div(&a0).expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            let c = d.exact_div(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        (lc, out)
    }

    /// The squarefree part (radical), monic.
    pub fn radical(&self) -> QPoly {
        let (_, parts) = self.squarefree();
        parts.iter().fold(QPoly::one(), |acc, (f, _)| acc.mul(f))
    }

    /// All rational roots (without multiplicity, ascending), or `None` when
    /// the coefficients are too large to enumerate candidates.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.coeff(0).is_zero() {
            roots.push(Rational::zero());
            let k = p.coeffs.iter().take_while(|c| c.is_zero()).count();
            p = QPoly::new(p.coeffs[k..].to_vec());
        }
        if p.degree().unwrap_or(0) > 0 {
            let ints = integer_coeffs(&p);
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let ps = divisors(&a0)?;
            let qs = divisors(&an)?;
            if ps.len().saturating_mul(qs.len()) > MAX_CANDIDATES {
                return None;
            }
            for num in &ps {
                for den in &qs {
                    for sgn in [1, -1] {
                        let r = Rational::new(num * sgn, den.clone());
                        if !roots.contains(&r) && p.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    pub fn to_mpoly(&self, vars: &Vars, name: &str) -> Result<MPoly> {
        let x = MPoly::var(vars, name)?;
        let mut acc = MPoly::zero(vars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + &MPoly::constant(vars, c.clone());
        }
        Ok(acc)
    }

    /// Reads a polynomial that involves at most the variable `name`.
    pub fn from_mpoly(p: &MPoly, name: &str) -> Result<QPoly> {
        let up = if p.vars().contains(name) {
            p.to_upoly(name)?
        } else {
            UPoly::constant(name, p.clone())
        };
        QPoly::from_upoly(&up)
    }

    /// Reads a univariate polynomial whose coefficients are constants.
    pub fn from_upoly(p: &UPoly) -> Result<QPoly> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                c.constant_value()
                    .ok_or_else(|| AlgebraError::UnknownVariable(c.support_vars().join(",")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QPoly::new(coeffs))
    }

    pub fn to_upoly(&self, var: &str) -> UPoly {
        UPoly::from_rationals(var, &self.coeffs)
    }

    pub fn display(&self, var: &str) -> String {
        let vars = Vars::new([var]);
        self.to_mpoly(&vars, var).expect("own variable").to_string()
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self.display("x"))
    }
}

const MAX_CANDIDATES: usize = 1 << 20;
const TRIAL_LIMIT: u64 = 1_000_000;

/// Primitive integer coefficient vector proportional to `p`.
fn integer_coeffs(p: &QPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors of `n > 0` by trial division, or `None` if `n` has a
/// cofactor that trial division up to the limit cannot certify as prime.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let bound = BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT);
        if rest >= bound && BigInt::from(p).pow(2) <= rest {
            return None;
        }
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= &prime;
                next.push(acc.clone());
            }
        }
        divs = next;
        if divs.len() > MAX_CANDIDATES {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}
