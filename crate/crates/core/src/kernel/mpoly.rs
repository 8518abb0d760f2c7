//! Sparse multivariate polynomials in `x0..x{n}` with exponent-vector terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::Rat;
use super::upoly::UPoly;
use crate::{Error, Result};

/// Coefficient ring of an [`MPoly`].
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl Scalar for Rat {}
impl Scalar for super::DualRat {}

/// Exponent vector. Ordered graded-lexicographically with `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<S = Rat> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, i), S::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: S) -> Self {
        assert_eq!(m.0.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, S)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &[S]) -> S {
        assert_eq!(x.len(), self.nvars, "evaluation point length");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * xi.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            let mut k = S::zero();
            for _ in 0..e {
                k = k + S::one();
            }
            out.add_term(m2, c.clone() * k);
        }
        out
    }

    /// `Σ e_i ∂f/∂x_i`.
    pub fn directional_derivative(&self, e: &[S]) -> Result<Self> {
        check_len(self.nvars, e.len())?;
        let mut out = Self::zero(self.nvars);
        for (i, ei) in e.iter().enumerate() {
            if !ei.is_zero() {
                out = &out + &self.partial(i).scale(ei);
            }
        }
        Ok(out)
    }

    /// Replaces `x_i` by `subs[i]`; the result lives in the ring of the substitutes.
    pub fn substitute(&self, subs: &[MPoly<S>]) -> Result<Self> {
        check_len(self.nvars, subs.len())?;
        let target = subs.first().map(|p| p.nvars).unwrap_or(0);
        if let Some(bad) = subs.iter().find(|p| p.nvars != target) {
            return Err(Error::DimensionMismatch { expected: target, got: bad.nvars });
        }
        // cache powers per variable
        let mut powers: Vec<Vec<MPoly<S>>> = subs.iter().map(|s| vec![MPoly::one(s.nvars)]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &subs[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `f ∘ C`: `x_i ↦ Σ_j C[i][j]·x_j`.
    pub fn substitute_linear(&self, c: &[Vec<S>]) -> Result<Self> {
        check_len(self.nvars, c.len())?;
        let mut subs = Vec::with_capacity(c.len());
        for row in c {
            check_len(self.nvars, row.len())?;
            let mut p = Self::zero(self.nvars);
            for (j, v) in row.iter().enumerate() {
                p.add_term(Monomial::var(self.nvars, j), v.clone());
            }
            subs.push(p);
        }
        self.substitute(&subs)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MPoly<T> {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Same polynomial viewed in a ring with `nvars` variables (new ones appended).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.resize(nvars, 0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

impl MPoly<Rat> {
    /// `t ↦ f(x + t·e)`.
    pub fn restrict_to_line(&self, x: &[Rat], e: &[Rat]) -> Result<UPoly> {
        check_len(self.nvars, x.len())?;
        check_len(self.nvars, e.len())?;
        let lines: Vec<UPoly> = x
            .iter()
            .zip(e)
            .map(|(xi, ei)| UPoly::new(vec![xi.clone(), ei.clone()]))
            .collect();
        let mut powers: Vec<Vec<UPoly>> = lines.iter().map(|_| vec![UPoly::one()]).collect();
        let mut out = UPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UPoly::constant(c.clone());
            for (i, &k) in m.0.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &lines[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// A univariate polynomial in variable `i`, if no other variable occurs.
    pub fn to_upoly(&self, i: usize) -> Option<UPoly> {
        let mut coeffs = vec![Rat::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            coeffs[m.0[i] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn from_upoly(p: &UPoly, nvars: usize, i: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Coefficients of a linear form, if `self` is one.
    pub fn linear_coeffs(&self) -> Option<Vec<Rat>> {
        if !self.terms.keys().all(|m| m.degree() == 1) {
            return None;
        }
        let mut v = vec![Rat::zero(); self.nvars];
        for (m, c) in &self.terms {
            let i = m.0.iter().position(|&e| e == 1).unwrap();
            v[i] = c.clone();
        }
        Some(v)
    }

    pub fn linear_form(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        let mut out = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            out.add_term(Monomial::var(n, i), c.clone());
        }
        out
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        super::parse::parse_poly(s, Some(nvars))
    }

    /// Parses with the variable count inferred from the largest index present.
    pub fn parse_auto(s: &str) -> Result<Self> {
        super::parse::parse_poly(s, None)
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

impl<'a, S: Scalar> Add<&'a MPoly<S>> for &'a MPoly<S> {
    type Output = MPoly<S>;
    fn add(self, o: &MPoly<S>) -> MPoly<S> {
        assert_eq!(self.nvars, o.nvars, "variable count");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a MPoly<S>> for &'a MPoly<S> {
    type Output = MPoly<S>;
    fn sub(self, o: &MPoly<S>) -> MPoly<S> {
        assert_eq!(self.nvars, o.nvars, "variable count");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Mul<&'a MPoly<S>> for &'a MPoly<S> {
    type Output = MPoly<S>;
    fn mul(self, o: &MPoly<S>) -> MPoly<S> {
        assert_eq!(self.nvars, o.nvars, "variable count");
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &MPoly<S> {
    type Output = MPoly<S>;
    fn neg(self) -> MPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Add for MPoly<S> {
    type Output = MPoly<S>;
    fn add(self, o: MPoly<S>) -> MPoly<S> {
        &self + &o
    }
}

impl<S: Scalar> Sub for MPoly<S> {
    type Output = MPoly<S>;
    fn sub(self, o: MPoly<S>) -> MPoly<S> {
        &self - &o
    }
}

impl<S: Scalar> Mul for MPoly<S> {
    type Output = MPoly<S>;
    fn mul(self, o: MPoly<S>) -> MPoly<S> {
        &self * &o
    }
}

impl<S: Scalar> Neg for MPoly<S> {
    type Output = MPoly<S>;
    fn neg(self) -> MPoly<S> {
        -&self
    }
}

impl std::fmt::Display for MPoly<Rat> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&super::parse::print_poly(self))
    }
}

impl serde::Serialize for MPoly<Rat> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}
