//! Dense univariate polynomials whose coefficients are [`MPoly`]s.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{MPoly, Rational, Vars};
use crate::error::{AlgebraError, Result};

/// `Σ coeffs[i] · var^i` with coefficients in a shared universe `cvars`
/// that does not contain `var`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    var: String,
    cvars: Vars,
    coeffs: Vec<MPoly>,
}

impl UPoly {
    pub fn new(var: &str, cvars: &Vars, coeffs: Vec<MPoly>) -> Self {
        assert!(
            !cvars.contains(var),
            "main variable `{var}` inside coefficient universe"
        );
        for c in &coeffs {
            assert_eq!(c.vars(), cvars, "coefficient universe mismatch");
        }
        let mut p = UPoly {
            var: var.to_string(),
            cvars: cvars.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(var: &str, cvars: &Vars) -> Self {
        UPoly::new(var, cvars, Vec::new())
    }

    pub fn constant(var: &str, c: MPoly) -> Self {
        let cv = c.vars().clone();
        UPoly::new(var, &cv, vec![c])
    }

    /// `c · var^k`.
    pub fn monomial(var: &str, c: MPoly, k: usize) -> Self {
        let cv = c.vars().clone();
        let mut coeffs = vec![MPoly::zero(&cv); k];
        coeffs.push(c);
        UPoly::new(var, &cv, coeffs)
    }

    /// Rational-coefficient polynomial, low degree first.
    pub fn from_rationals(var: &str, coeffs: &[Rational]) -> Self {
        let cv = Vars::empty();
        UPoly::new(
            var,
            &cv,
            coeffs
                .iter()
                .map(|c| MPoly::constant(&cv, c.clone()))
                .collect(),
        )
    }

    /// The generic monic polynomial `t^n + q1 t^(n-1) + … + qn` over `q1…qn`.
    pub fn generic_monic(var: &str, n: usize) -> Self {
        let qv = Vars::q(n);
        let mut coeffs = vec![MPoly::zero(&qv); n + 1];
        coeffs[n] = MPoly::one(&qv);
        for j in 1..=n {
            coeffs[n - j] = MPoly::var(&qv, &format!("q{j}")).unwrap();
        }
        UPoly::new(var, &qv, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(MPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeff_vars(&self) -> &Vars {
        &self.cvars
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Coefficient of `var^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> MPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&self.cvars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> MPoly {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&self.cvars))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(MPoly::is_one)
    }

    /// True when every coefficient is a rational constant.
    pub fn has_constant_coeffs(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_constant)
    }

    fn check_compatible(&self, other: &UPoly) -> Result<()> {
        if self.var != other.var {
            return Err(AlgebraError::MainVarMismatch(
                self.var.clone(),
                other.var.clone(),
            ));
        }
        if self.cvars != other.cvars {
            return Err(AlgebraError::VarsMismatch {
                left: self.cvars.names().join(","),
                right: other.cvars.names().join(","),
            });
        }
        Ok(())
    }

    fn with_coeffs(&self, coeffs: Vec<MPoly>) -> UPoly {
        let mut p = UPoly {
            var: self.var.clone(),
            cvars: self.cvars.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn checked_add(&self, other: &UPoly) -> Result<UPoly> {
        self.check_compatible(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.with_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect()))
    }

    pub fn checked_sub(&self, other: &UPoly) -> Result<UPoly> {
        self.check_compatible(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.with_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect()))
    }

    pub fn checked_mul(&self, other: &UPoly) -> Result<UPoly> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.with_coeffs(Vec::new()));
        }
        let mut out = vec![MPoly::zero(&self.cvars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(self.with_coeffs(out))
    }

    pub fn neg(&self) -> UPoly {
        self.with_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &MPoly) -> UPoly {
        self.with_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient exactly by `c`.
    pub fn exact_div_coeff(&self, c: &MPoly) -> Result<UPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.exact_divide(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_coeffs(coeffs))
    }

    /// Multiplies by `var^k`.
    pub fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![MPoly::zero(&self.cvars); k];
        coeffs.extend(self.coeffs.iter().cloned());
        self.with_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::constant(&self.var, MPoly::one(&self.cvars));
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Derivative in the main variable.
    pub fn derivative(&self) -> UPoly {
        self.with_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i))))
                .collect(),
        )
    }

    /// Partial derivative in a coefficient variable.
    pub fn derivative_coeff(&self, name: &str) -> Result<UPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.derivative(name))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_coeffs(coeffs))
    }

    /// Derivative with respect to `name`, main or coefficient variable.
    pub fn derivative_wrt(&self, name: &str) -> Result<UPoly> {
        if name == self.var {
            Ok(self.derivative())
        } else {
            self.derivative_coeff(name)
        }
    }

    /// Composition `self(expr)`: the main variable is replaced by `expr`.
    pub fn substitute(&self, var: &str, expr: &UPoly) -> Result<UPoly> {
        if var != self.var {
            return Err(AlgebraError::UnknownVariable(var.to_string()));
        }
        self.check_compatible(expr)?;
        let mut acc = self.with_coeffs(Vec::new());
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(expr)?;
            acc = acc.checked_add(&UPoly::constant(&self.var, c.clone()))?;
        }
        Ok(acc)
    }

    /// Value at `var = x`, a coefficient-ring element.
    pub fn eval(&self, x: &MPoly) -> MPoly {
        let mut acc = MPoly::zero(&self.cvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Applies `f` to every coefficient. `f` must map into `cvars`.
    pub fn map_coeffs<F>(&self, cvars: &Vars, f: F) -> Result<UPoly>
    where
        F: Fn(&MPoly) -> Result<MPoly>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(UPoly::new(&self.var, cvars, coeffs))
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &UPoly) -> Result<UPoly> {
        self.check_compatible(d)?;
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(mut rd) = self.degree() else {
            return Ok(self.clone());
        };
        if rd < dd {
            return Ok(self.clone());
        }
        let lc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut steps = 0usize;
        while r.len() > dd && !r.is_empty() {
            let k = rd - dd;
            let lr = r[rd].clone();
            // r ← lc·r − lr·x^k·d
            for c in r.iter_mut() {
                *c = &*c * &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + k] = &r[i + k] - &(&lr * dc);
                }
            }
            debug_assert!(r[rd].is_zero());
            steps += 1;
            while r.last().is_some_and(MPoly::is_zero) {
                r.pop();
            }
            match r.len().checked_sub(1) {
                Some(x) => rd = x,
                None => break,
            }
        }
        let total = self.degree().unwrap() - dd + 1;
        let mut out = self.with_coeffs(r);
        if steps < total {
            out = out.scale(&lc.pow((total - steps) as u32));
        }
        Ok(out)
    }

    /// Exact quotient over the coefficient ring; errors if `d` does not
    /// divide `self` in `R[var]`.
    pub fn exact_div(&self, d: &UPoly) -> Result<UPoly> {
        self.check_compatible(d)?;
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(sd) = self.degree() else {
            return Ok(self.clone());
        };
        if sd < dd {
            return Err(AlgebraError::NotDivisible);
        }
        let lc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![MPoly::zero(&self.cvars); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let qc = top.exact_divide(&lc)?;
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + k] = &r[i + k] - &(&qc * dc);
                }
            }
            q[k] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(self.with_coeffs(q))
    }

    /// Flattens into a polynomial over `target`, which must contain the main
    /// variable and every coefficient variable.
    pub fn to_mpoly(&self, target: &Vars) -> Result<MPoly> {
        let x = MPoly::var(target, &self.var)?;
        let mut acc = MPoly::zero(target);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + &c.embed(target)?;
        }
        Ok(acc)
    }

    /// The natural flattening universe: main variable first.
    pub fn flat_vars(&self) -> Vars {
        self.cvars.with_front(&self.var)
    }
}

impl MPoly {
    /// Views the polynomial as univariate in `name` over the remaining
    /// variables.
    pub fn to_upoly(&self, name: &str) -> Result<UPoly> {
        let idx = self
            .vars()
            .index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let cvars = self.vars().without(name);
        let deg = self.degree_in(name)?.unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<_>> = vec![Vec::new(); deg + 1];
        for (m, c) in self.terms() {
            let e: Vec<u32> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, &x)| x)
                .collect();
            buckets[m.exp(idx) as usize].push((crate::algebra::Monomial::from_exps(e), c.clone()));
        }
        let coeffs = buckets
            .into_iter()
            .map(|b| MPoly::from_terms(&cvars, b))
            .collect();
        Ok(UPoly::new(name, &cvars, coeffs))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat = self.to_mpoly(&self.flat_vars()).map_err(|_| fmt::Error)?;
        write!(f, "{flat}")
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly[{}; {:?}]({})", self.var, self.cvars, self)
    }
}
