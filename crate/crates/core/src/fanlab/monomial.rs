//! Monomial ideals in `Q[x0, ..., xn]`.

use std::fmt;

use serde::Serialize;

use crate::kernel::{MPoly, Monomial};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    /// Minimal generators, sorted.
    gens: Vec<Monomial>,
}

/// Drops every generator divisible by another one; sorts and dedups.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.0.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: g.0.len() });
            }
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(gens) })
    }

    pub fn from_exponents(nvars: usize, exps: &[Vec<u32>]) -> Result<Self> {
        Self::new(nvars, exps.iter().map(|e| Monomial(e.clone())).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![] }
    }

    /// Reads a comma separated list such as `"x2^2, x2*x3, x3^2"`.
    /// Coefficients are ignored; `"0"` or the empty string give the zero ideal.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for (offset, part) in split_top(s) {
            let p = MPoly::parse(part, nvars).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
                e => e,
            })?;
            if p.is_zero() {
                continue;
            }
            if p.num_terms() != 1 {
                return Err(Error::Parse { pos: offset, msg: format!("`{}` is not a monomial", part.trim()) });
            }
            gens.push(p.terms().next().expect("one term").0.clone());
        }
        Self::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_poly(&self, p: &MPoly) -> bool {
        p.terms().all(|(m, _)| self.contains(m))
    }

    /// Largest exponent of `x_i` among the minimal generators.
    pub fn max_exponent(&self, i: usize) -> u32 {
        self.gens.iter().map(|g| g.0[i]).max().unwrap_or(0)
    }

    /// Indices of the variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.max_exponent(i) > 0).collect()
    }

    pub fn with_generator(&self, m: &Monomial) -> Self {
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        MonomialIdeal { nvars: self.nvars, gens: minimalize(gens) }
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> Self {
        let gens = self.gens.iter().map(|g| g.gcd(m).quotient_of(g)).collect();
        MonomialIdeal { nvars: self.nvars, gens: minimalize(gens) }
    }

    pub fn is_radical(&self) -> bool {
        self.gens.iter().all(|g| g.0.iter().all(|&e| e <= 1))
    }

    pub fn radical(&self) -> Self {
        let gens = self.gens.iter().map(|g| Monomial(g.0.iter().map(|&e| e.min(1)).collect())).collect();
        MonomialIdeal { nvars: self.nvars, gens: minimalize(gens) }
    }

    /// Irredundant decomposition into irreducible ideals `(x_i^{a_i} : a_i > 0)`,
    /// each returned as its exponent vector.
    pub fn irreducible_components(&self) -> Vec<Vec<u32>> {
        let mut found = Vec::new();
        decompose(self.nvars, self.gens.clone(), &mut found);
        found.sort();
        found.dedup();
        let contained = |q: &[u32], r: &[u32]| q.iter().zip(r).all(|(&a, &b)| a == 0 || (b > 0 && b <= a));
        let keep: Vec<Vec<u32>> = found
            .iter()
            .filter(|r| !found.iter().any(|q| q != *r && contained(q, r)))
            .cloned()
            .collect();
        keep
    }

    /// Supports of the minimal primes; each prime is `(x_i : i in S)`.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        let supports: Vec<Vec<usize>> = self
            .radical()
            .irreducible_components()
            .into_iter()
            .map(|c| (0..c.len()).filter(|&i| c[i] > 0).collect())
            .collect();
        let mut out: Vec<Vec<usize>> = supports
            .iter()
            .filter(|s| !supports.iter().any(|t| t != *s && t.iter().all(|i| s.contains(i))))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All associated primes have the same height.
    pub fn is_unmixed(&self) -> bool {
        let comps = self.irreducible_components();
        let heights: Vec<usize> = comps.iter().map(|c| c.iter().filter(|&&a| a > 0).count()).collect();
        heights.windows(2).all(|w| w[0] == w[1])
    }

    /// Balanced: `f(x_i := x_j) ∈ I` for `f ∈ I` and `1 <= i < j <= n`.
    /// Checking generators suffices because the substitution is a ring map.
    pub fn is_balanced(&self) -> bool {
        let n = self.nvars;
        self.gens.iter().all(|g| {
            (1..n).all(|i| g.0[i] == 0 || (i + 1..n).all(|j| self.contains(&substitute_var(g, i, j))))
        })
    }

    /// Number of monomials of degree `d` outside the ideal, by enumeration.
    pub fn standard_monomial_count(&self, d: u32) -> u64 {
        let mut count = 0;
        for_each_monomial(self.nvars, d, &mut |m| {
            if !self.contains(m) {
                count += 1;
            }
        });
        count
    }

    pub fn to_polys(&self) -> Vec<MPoly> {
        self.gens.iter().map(|g| MPoly::term(self.nvars, g.clone(), crate::kernel::rat::one())).collect()
    }
}

/// `m(x_i := x_j)`.
pub fn substitute_var(m: &Monomial, i: usize, j: usize) -> Monomial {
    let mut e = m.0.clone();
    e[j] += e[i];
    e[i] = 0;
    Monomial(e)
}

/// Calls `f` on every monomial of degree `d` in `nvars` variables.
pub fn for_each_monomial(nvars: usize, d: u32, f: &mut dyn FnMut(&Monomial)) {
    fn go(e: &mut Vec<u32>, i: usize, left: u32, f: &mut dyn FnMut(&Monomial)) {
        if i + 1 == e.len() {
            e[i] = left;
            f(&Monomial(e.clone()));
            return;
        }
        for a in (0..=left).rev() {
            e[i] = a;
            go(e, i + 1, left - a, f);
        }
        e[i] = 0;
    }
    if nvars == 0 {
        return;
    }
    go(&mut vec![0; nvars], 0, d, f);
}

fn decompose(nvars: usize, gens: Vec<Monomial>, out: &mut Vec<Vec<u32>>) {
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.is_one()) {
        return;
    }
    let mixed = gens.iter().position(|g| g.0.iter().filter(|&&e| e > 0).count() > 1);
    match mixed {
        None => {
            let mut e = vec![0; nvars];
            for g in &gens {
                let i = g.0.iter().position(|&a| a > 0).expect("pure power");
                e[i] = g.0[i];
            }
            out.push(e);
        }
        Some(k) => {
            let g = &gens[k];
            let i = g.0.iter().position(|&a| a > 0).expect("mixed generator");
            let mut pure = vec![0; g.0.len()];
            pure[i] = g.0[i];
            let mut rest = g.0.clone();
            rest[i] = 0;
            let others: Vec<Monomial> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, m)| m.clone()).collect();
            let mut a = others.clone();
            a.push(Monomial(pure));
            decompose(nvars, a, out);
            let mut b = others;
            b.push(Monomial(rest));
            decompose(nvars, b, out);
        }
    }
}

/// Splits on commas outside parentheses, keeping byte offsets.
fn split_top(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() || !out.is_empty() {
        out.push((start, &s[start..]));
    }
    out.retain(|(_, p)| !p.trim().is_empty());
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_polys().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    #[test]
    fn parse_minimalizes() {
        let i = ideal("x2^2, x2*x3, x3^2, x2^3*x1", 4);
        assert_eq!(i.gens().len(), 3);
        assert_eq!(i.to_string(), ideal("x3^2, x2^2, x2*x3", 4).to_string());
        assert!(MonomialIdeal::parse("x1 + x2", 3).is_err());
        assert!(ideal("0", 3).is_zero());
        assert!(ideal("", 3).is_zero());
    }

    #[test]
    fn balanced_examples() {
        assert!(ideal("x2^2, x2*x3, x3^2", 4).is_balanced());
        assert!(!ideal("x1^2", 3).is_balanced());
        assert!(ideal("x1, x2, x3", 4).is_balanced());
        assert!(ideal("x3", 4).is_balanced());
        assert!(!ideal("x2", 4).is_balanced());
    }

    #[test]
    fn colon_and_radical() {
        let i = ideal("x2^2, x2*x3, x3^2", 4);
        let c = i.colon(&Monomial(vec![0, 0, 1, 0]));
        assert_eq!(c, ideal("x2, x3", 4));
        assert_eq!(i.radical(), ideal("x2, x3", 4));
        assert!(!i.is_radical());
    }

    #[test]
    fn decompositions() {
        let i = ideal("x1*x2, x1*x3", 4);
        assert_eq!(i.minimal_primes(), vec![vec![1], vec![2, 3]]);
        assert!(!i.is_unmixed());
        let j = ideal("x2^2, x2*x3, x3^2", 4);
        assert_eq!(j.minimal_primes(), vec![vec![2, 3]]);
        assert!(j.is_unmixed());
        assert_eq!(MonomialIdeal::zero(3).minimal_primes(), vec![Vec::<usize>::new()]);
        assert!(ideal("1", 3).minimal_primes().is_empty());
        // (x1^2, x1 x2) = (x1) ∩ (x1^2, x2) has an embedded component
        let k = ideal("x1^2, x1*x2", 3);
        assert_eq!(k.irreducible_components().len(), 2);
        assert!(!k.is_unmixed());
    }

    #[test]
    fn standard_monomials() {
        let i = ideal("x2^2, x2*x3, x3^2", 4);
        for d in 0..6 {
            assert_eq!(i.standard_monomial_count(d), 3 * d as u64 + 1);
        }
    }
}
