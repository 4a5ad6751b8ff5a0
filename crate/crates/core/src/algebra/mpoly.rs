//! Sparse multivariate polynomials over ℚ.
//!
//! A polynomial lives in an explicit variable universe ([`Vars`]); the
//! universe fixes both the set of admissible variables and their lex
//! priority. Terms are kept sorted in descending graded-lexicographic order
//! with no zero coefficients, so structural equality is mathematical
//! equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{AlgebraError, Result};

/// An ordered list of variable names. Earlier names rank higher in lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, a) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(a),
                "duplicate variable `{a}` in universe"
            );
        }
        Vars(names.into())
    }

    pub fn empty() -> Self {
        Vars::new(Vec::<String>::new())
    }

    /// `q1, …, qn`.
    pub fn q(n: usize) -> Self {
        Vars::new((1..=n).map(|j| format!("q{j}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index(name).is_some()
    }

    /// The universe with `name` removed (order of the rest preserved).
    pub fn without(&self, name: &str) -> Vars {
        Vars::new(self.0.iter().filter(|v| *v != name).cloned())
    }

    /// `name` prepended to this universe.
    pub fn with_front(&self, name: &str) -> Vars {
        Vars::new(std::iter::once(name.to_string()).chain(self.0.iter().cloned()))
    }

    fn ensure_same(&self, other: &Vars) -> Result<()> {
        if Arc::ptr_eq(&self.0, &other.0) || self == other {
            Ok(())
        } else {
            Err(AlgebraError::VarsMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

/// Exponent vector over a universe, ordered graded-lexicographically.
///
/// Derived ordering compares the cached total degree first, then exponents
/// lexicographically, which is exactly grlex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            degree,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, idx: usize, pow: u32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = pow;
        Monomial::from_exps(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            degree: other.degree - self.degree,
            exps,
        }
    }

    fn with_exp(&self, idx: usize, e: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[idx] = e;
        Monomial::from_exps(exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// A polynomial in [`Vars`] with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    vars: Vars,
    // descending grlex, nonzero coefficients
    terms: Vec<(Monomial, Rational)>,
}

impl MPoly {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        MPoly::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        MPoly::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let idx = vars
            .index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(MPoly {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), idx, 1), Rational::one())],
        })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.exps.len(), vars.len(), "monomial arity mismatch");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        MPoly::from_sorted_map(vars, acc)
    }

    fn from_sorted_map(vars: &Vars, acc: BTreeMap<Monomial, Rational>) -> Self {
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MPoly {
            vars: vars.clone(),
            terms,
        }
    }

    fn from_hash(vars: &Vars, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree)
    }

    /// Degree in a single variable (`None` for the zero polynomial).
    pub fn degree_in(&self, name: &str) -> Result<Option<u32>> {
        let idx = self.index_of(name)?;
        Ok(self.terms.iter().map(|(m, _)| m.exps[idx]).max())
    }

    /// Names of variables that actually occur.
    pub fn support_vars(&self) -> Vec<&str> {
        (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exps[i] > 0))
            .map(|i| self.vars.0[i].as_str())
            .collect()
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.vars.ensure_same(&other.vars)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.vars.ensure_same(&other.vars)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })),
        );
        MPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.vars.ensure_same(&other.vars)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(&self.vars);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let (sm, sc) = &single.terms[0];
            // multiplying by a monomial preserves the order
            return MPoly {
                vars: self.vars.clone(),
                terms: many
                    .terms
                    .iter()
                    .map(|(m, c)| (m.mul(sm), c * sc))
                    .collect(),
            };
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        MPoly::from_hash(&self.vars, acc)
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, name: &str) -> Result<MPoly> {
        let idx = self.index_of(name)?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[idx] > 0)
            .map(|(m, c)| {
                let e = m.exps[idx];
                (
                    m.with_exp(idx, e - 1),
                    c * Rational::from_integer(BigInt::from(e)),
                )
            });
        Ok(MPoly::from_terms(&self.vars, terms))
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self`.
    pub fn exact_divide(&self, d: &MPoly) -> Result<MPoly> {
        self.vars.ensure_same(&d.vars)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(MPoly::zero(&self.vars));
        }
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let (dm, dc) = d.leading_term().expect("nonzero");
        if d.terms.len() == 1 {
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return Err(AlgebraError::NotDivisible);
                }
                terms.push((dm.quotient_of(m), c * &inv));
            }
            return Ok(MPoly {
                vars: self.vars.clone(),
                terms,
            });
        }
        let inv = dc.recip();
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !dm.divides(&m) || m.degree < dm.degree {
                return Err(AlgebraError::NotDivisible);
            }
            let qm = dm.quotient_of(&m);
            let qc = &c * &inv;
            for (tm, tc) in d.terms.iter().skip(1) {
                let key = tm.mul(&qm);
                let delta = &qc * tc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(MPoly {
            vars: self.vars.clone(),
            terms: quotient,
        })
    }

    /// Splits `self = A + B` where every monomial of `A` is divisible by
    /// `name^k` and no monomial of `B` is.
    pub fn partition_by_divisibility(&self, name: &str, k: u32) -> Result<(MPoly, MPoly)> {
        let idx = self.index_of(name)?;
        let (a, b): (Vec<_>, Vec<_>) = self
            .terms
            .iter()
            .cloned()
            .partition(|(m, _)| m.exps[idx] >= k);
        Ok((
            MPoly {
                vars: self.vars.clone(),
                terms: a,
            },
            MPoly {
                vars: self.vars.clone(),
                terms: b,
            },
        ))
    }

    /// Substitutes a rational value for one variable; the universe is kept.
    pub fn eval_var(&self, name: &str, value: &Rational) -> Result<MPoly> {
        let idx = self.index_of(name)?;
        let mut powers: Vec<Rational> = vec![Rational::one()];
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exps[idx] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            (m.with_exp(idx, 0), c * &powers[e])
        });
        let terms: Vec<_> = terms.collect();
        Ok(MPoly::from_terms(&self.vars, terms))
    }

    /// Full evaluation; `values` follows the universe order.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len(), "evaluation arity mismatch");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m.exps.iter()) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces variable `name` by the polynomial `expr` (same universe).
    pub fn compose(&self, name: &str, expr: &MPoly) -> Result<MPoly> {
        self.vars.ensure_same(&expr.vars)?;
        let idx = self.index_of(name)?;
        let mut powers = vec![MPoly::one(&self.vars)];
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exps[idx] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul_unchecked(expr);
                powers.push(next);
            }
            let rest = m.with_exp(idx, 0);
            for (pm, pc) in &powers[e].terms {
                *acc.entry(rest.mul(pm)).or_insert_with(Rational::zero) += c * pc;
            }
        }
        Ok(MPoly::from_hash(&self.vars, acc))
    }

    /// Re-expresses the polynomial in a universe containing every variable
    /// that occurs in it.
    pub fn embed(&self, target: &Vars) -> Result<MPoly> {
        let map: Vec<Option<usize>> = self.vars.0.iter().map(|v| target.index(v)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in m.exps.iter().enumerate() {
                if x > 0 {
                    let j = map[i]
                        .ok_or_else(|| AlgebraError::UnknownVariable(self.vars.0[i].clone()))?;
                    e[j] = x;
                }
            }
            terms.push((Monomial::from_exps(e), c.clone()));
        }
        Ok(MPoly::from_terms(target, terms))
    }

    /// Parses the textual grammar against a given universe.
    pub fn parse(src: &str, vars: &Vars) -> Result<MPoly> {
        parse::parse(src, Some(vars))
    }

    /// Parses, inferring the universe from the variables that occur
    /// (sorted by name, with numeric suffixes compared numerically).
    pub fn parse_infer(src: &str) -> Result<MPoly> {
        parse::parse(src, None)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (name, &e) in self.vars.0.iter().zip(m.exps.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly{:?}({})", self.vars, self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs)
                    .expect("polynomial operands in different universes")
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

mod parse {
    use super::*;
    use num_traits::Num;

    struct Lexer<'a> {
        src: &'a [u8],
        pos: usize,
    }

    impl<'a> Lexer<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.src.get(self.pos).copied()
        }

        fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
            Err(AlgebraError::Parse {
                pos: self.pos,
                msg: msg.into(),
            })
        }

        fn number(&mut self) -> Result<BigInt> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected digits");
            }
            let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            Ok(BigInt::from_str_radix(s, 10).unwrap())
        }

        fn ident(&mut self) -> Result<String> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected identifier");
            }
            Ok(std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .to_string())
        }
    }

    enum Factor {
        Coeff(Rational),
        Power(String, u32),
    }

    type RawTerm = (Rational, Vec<(String, u32)>);

    fn factor(lx: &mut Lexer<'_>) -> Result<Factor> {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = lx.number()?;
                if lx.peek() == Some(b'/') {
                    lx.pos += 1;
                    let den = lx.number()?;
                    if den.is_zero() {
                        return lx.err("zero denominator");
                    }
                    Ok(Factor::Coeff(Rational::new(num, den)))
                } else {
                    Ok(Factor::Coeff(Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = lx.ident()?;
                let mut e = 1u32;
                if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    let n = lx.number()?;
                    e = u32::try_from(&n).or_else(|_| lx.err("exponent too large"))?;
                }
                Ok(Factor::Power(name, e))
            }
            Some(_) => lx.err("unexpected character"),
            None => lx.err("unexpected end of input"),
        }
    }

    fn terms(src: &str) -> Result<Vec<RawTerm>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        if lx.peek().is_none() {
            return lx.err("empty polynomial");
        }
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match lx.peek() {
                None => break,
                Some(b'+') if !first || out.is_empty() => {
                    lx.pos += 1;
                }
                Some(b'-') => {
                    lx.pos += 1;
                    sign = -sign;
                }
                Some(_) if first => {}
                Some(_) => return lx.err("expected `+` or `-`"),
            }
            first = false;
            let mut coeff = sign;
            let mut powers = Vec::new();
            loop {
                match factor(&mut lx)? {
                    Factor::Coeff(c) => coeff *= c,
                    Factor::Power(v, e) => powers.push((v, e)),
                }
                if lx.peek() == Some(b'*') {
                    lx.pos += 1;
                } else {
                    break;
                }
            }
            out.push((coeff, powers));
        }
        Ok(out)
    }

    fn name_key(s: &str) -> (String, Option<u64>, String) {
        let split = s
            .char_indices()
            .find(|(_, c)| c.is_ascii_digit())
            .map(|(i, _)| i)
            .unwrap_or(s.len());
        let (head, tail) = s.split_at(split);
        (head.to_string(), tail.parse().ok(), tail.to_string())
    }

    pub(super) fn parse(src: &str, vars: Option<&Vars>) -> Result<MPoly> {
        let raw = terms(src)?;
        let vars = match vars {
            Some(v) => v.clone(),
            None => {
                let mut names: Vec<String> = Vec::new();
                for (_, ps) in &raw {
                    for (v, _) in ps {
                        if !names.contains(v) {
                            names.push(v.clone());
                        }
                    }
                }
                names.sort_by_key(|a| name_key(a));
                Vars::new(names)
            }
        };
        let mut out = Vec::with_capacity(raw.len());
        for (c, ps) in raw {
            let mut e = vec![0u32; vars.len()];
            for (v, k) in ps {
                let i = vars
                    .index(&v)
                    .ok_or_else(|| AlgebraError::UnknownVariable(v.clone()))?;
                e[i] += k;
            }
            out.push((Monomial::from_exps(e), c));
        }
        Ok(MPoly::from_terms(&vars, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Vars {
        Vars::q(3)
    }

    fn p(s: &str, v: &Vars) -> MPoly {
        MPoly::parse(s, v).unwrap()
    }

    #[test]
    fn cancellation() {
        let v = q3();
        assert_eq!(p("q1 + q2", &v) + p("q1 - q2", &v), p("2*q1", &v));
    }

    #[test]
    fn difference_of_squares() {
        let v = Vars::new(["t"]);
        assert_eq!(p("t - 1", &v) * p("t + 1", &v), p("t^2 - 1", &v));
    }

    #[test]
    fn binomial_cube() {
        let v = q3();
        let c = p("q1 + q2", &v).pow(3);
        let coeffs: Vec<String> = c.terms().iter().map(|(_, c)| c.to_string()).collect();
        assert_eq!(coeffs, ["1", "3", "3", "1"]);
    }

    #[test]
    fn derivatives() {
        let v = Vars::new(["t", "q1"]);
        assert_eq!(
            p("t^3 + q1*t", &v).derivative("t").unwrap(),
            p("3*t^2 + q1", &v)
        );
        let w = Vars::new(["z", "q2"]);
        assert_eq!(p("z^2*q2", &w).derivative("z").unwrap(), p("2*z*q2", &w));
        assert!(p("7", &w).derivative("z").unwrap().is_zero());
    }

    #[test]
    fn exact_division_cases() {
        let v = q3();
        let num = p("q1^2*q2^2 - 4*q2^3", &v);
        assert_eq!(
            num.exact_divide(&p("q2^2", &v)).unwrap(),
            p("q1^2 - 4*q2", &v)
        );
        assert_eq!(num.exact_divide(&MPoly::one(&v)).unwrap(), num);
        assert_eq!(
            p("q1", &v).exact_divide(&p("q2", &v)),
            Err(AlgebraError::NotDivisible)
        );
        let a = p("q1^2 - q2^2 + 3*q3", &v);
        let b = p("q1 + 2*q3 - 1/2", &v);
        assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
        assert_eq!(
            (&a * &b + MPoly::one(&v)).exact_divide(&b),
            Err(AlgebraError::NotDivisible)
        );
    }

    #[test]
    fn partition_examples() {
        let v = q3();
        let (a, b) = p("q3*q1 + q2^2", &v)
            .partition_by_divisibility("q3", 1)
            .unwrap();
        assert_eq!(a, p("q1*q3", &v));
        assert_eq!(b, p("q2^2", &v));
        let (a, b) = p("q1 + q2", &v).partition_by_divisibility("q3", 1).unwrap();
        assert!(a.is_zero());
        assert_eq!(b, p("q1 + q2", &v));
    }

    #[test]
    fn mismatched_universes_error() {
        let a = MPoly::var(&Vars::new(["x"]), "x").unwrap();
        let b = MPoly::var(&Vars::new(["y"]), "y").unwrap();
        assert!(matches!(
            a.checked_add(&b),
            Err(AlgebraError::VarsMismatch { .. })
        ));
    }

    #[test]
    fn printing() {
        let v = Vars::q(2);
        assert_eq!(p("-4*q2 + q1^2", &v).to_string(), "q1^2 - 4*q2");
        assert_eq!(p("0", &v).to_string(), "0");
        assert_eq!(p("-1/2*q1 - 3", &v).to_string(), "-1/2*q1 - 3");
        let z = Vars::new(["z"]);
        assert_eq!(p("-27 * z ^ 2", &z).to_string(), "-27*z^2");
    }

    #[test]
    fn parse_errors() {
        let v = Vars::q(2);
        assert!(matches!(
            MPoly::parse("q1 +", &v),
            Err(AlgebraError::Parse { .. })
        ));
        assert!(matches!(
            MPoly::parse("q9", &v),
            Err(AlgebraError::UnknownVariable(_))
        ));
        assert!(matches!(
            MPoly::parse("1/0", &v),
            Err(AlgebraError::Parse { .. })
        ));
        assert!(matches!(
            MPoly::parse("", &v),
            Err(AlgebraError::Parse { .. })
        ));
    }

    #[test]
    fn inferred_universe_is_sorted_numerically() {
        let f = MPoly::parse_infer("q10 + q2*q1").unwrap();
        assert_eq!(f.vars().names(), ["q1", "q2", "q10"]);
    }

    #[test]
    fn compose_and_eval() {
        let v = Vars::new(["x", "y"]);
        let f = p("x^2 + y", &v);
        let g = f.compose("x", &p("y + 1", &v)).unwrap();
        assert_eq!(g, p("y^2 + 3*y + 1", &v));
        let r = |a: i64| Rational::from_integer(a.into());
        assert_eq!(f.eval(&[r(2), r(5)]), r(9));
        assert_eq!(f.eval_var("x", &r(3)).unwrap(), p("y + 9", &v));
    }
}
