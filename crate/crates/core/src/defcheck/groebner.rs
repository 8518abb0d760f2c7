//! Buchberger's algorithm with cofactor tracking.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::kernel::{MPoly, Monomial, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Lexicographic with `x0 > x1 > ...`.
    Lex,
    /// Degree first, ties broken lexicographically.
    #[default]
    GrLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrLex => a.cmp(b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScopeGuard {
    pub max_vars: usize,
    pub max_degree: i64,
    pub max_steps: usize,
}

impl Default for ScopeGuard {
    fn default() -> Self {
        ScopeGuard { max_vars: 3, max_degree: 4, max_steps: 2_000_000 }
    }
}

/// A reduced Gröbner basis `G` of the ideal generated by `generators`, with
/// `G[k] = Σ_j cofactors[k][j] · generators[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    nvars: usize,
    generators: Vec<MPoly>,
    elements: Vec<MPoly>,
    cofactors: Vec<Vec<MPoly>>,
    /// Syzygies of `elements` coming from their S-pairs.
    syzygies: Vec<Vec<MPoly>>,
    /// `generators[j] = Σ_k expansions[j][k] · elements[k]`.
    expansions: Vec<Vec<MPoly>>,
}

pub fn leading(p: &MPoly, order: MonomialOrder) -> Option<(Monomial, Rat)> {
    match order {
        MonomialOrder::GrLex => p.terms().next_back().map(|(m, c)| (m.clone(), c.clone())),
        MonomialOrder::Lex => p
            .terms()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone())),
    }
}

struct Reducer<'a> {
    order: MonomialOrder,
    basis: &'a [MPoly],
    leads: Vec<Monomial>,
    steps: usize,
    budget: usize,
}

impl<'a> Reducer<'a> {
    fn new(order: MonomialOrder, basis: &'a [MPoly], budget: usize) -> Self {
        let leads = basis.iter().map(|g| leading(g, order).expect("nonzero basis element").0).collect();
        Reducer { order, basis, leads, steps: 0, budget }
    }

    /// Full division: `p = Σ q_k basis[k] + r` with no term of `r` divisible by a leading monomial.
    fn divide(&mut self, p: &MPoly) -> Result<(Vec<MPoly>, MPoly)> {
        let n = p.nvars();
        let mut q = vec![MPoly::zero(n); self.basis.len()];
        let mut r = MPoly::zero(n);
        let mut rest = p.clone();
        while let Some((m, c)) = leading(&rest, self.order) {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::ScopeExceeded(format!("reduction budget of {} steps", self.budget)));
            }
            match self.leads.iter().position(|l| l.divides(&m)) {
                Some(k) => {
                    let t = self.leads[k].quotient_of(&m);
                    // basis elements are monic
                    rest = &rest - &self.basis[k].mul_term(&t, &c);
                    q[k].add_term(t, c);
                }
                None => {
                    rest.add_term(m.clone(), -c.clone());
                    r.add_term(m, c);
                }
            }
        }
        Ok((q, r))
    }
}

fn combine_cofactors(base: &[MPoly], q: &[MPoly], cof: &[Vec<MPoly>]) -> Vec<MPoly> {
    let mut out = base.to_vec();
    for (qk, ck) in q.iter().zip(cof) {
        if qk.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(ck) {
            *o = &*o - &(qk * c);
        }
    }
    out
}

fn scale_all(v: &[MPoly], c: &Rat) -> Vec<MPoly> {
    v.iter().map(|p| p.scale(c)).collect()
}

fn spoly(a: &MPoly, la: &Monomial, b: &MPoly, lb: &Monomial) -> (MPoly, Monomial, Monomial) {
    let l = la.lcm(lb);
    let ma = la.quotient_of(&l);
    let mb = lb.quotient_of(&l);
    let one = Rat::one();
    (&a.mul_term(&ma, &one) - &b.mul_term(&mb, &one), ma, mb)
}

fn check_scope(gens: &[MPoly], guard: &ScopeGuard) -> Result<usize> {
    let nvars = gens.first().map_or(0, |g| g.nvars());
    let mut used = vec![false; nvars];
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: g.nvars() });
        }
        if g.degree() > guard.max_degree {
            return Err(Error::ScopeExceeded(format!(
                "generator degree {} exceeds {}",
                g.degree(),
                guard.max_degree
            )));
        }
        for (m, _) in g.terms() {
            for (i, &e) in m.0.iter().enumerate() {
                used[i] |= e > 0;
            }
        }
    }
    let effective = used.iter().filter(|&&u| u).count();
    if effective > guard.max_vars {
        return Err(Error::ScopeExceeded(format!(
            "{effective} variables occur, at most {} supported",
            guard.max_vars
        )));
    }
    Ok(nvars)
}

pub fn buchberger(gens: &[MPoly], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, &ScopeGuard::default())
}

pub fn buchberger_with(gens: &[MPoly], order: MonomialOrder, guard: &ScopeGuard) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::Task("no generators".into()));
    }
    let nvars = check_scope(gens, guard)?;
    let ng = gens.len();
    let unit = |j: usize, c: &Rat| -> Vec<MPoly> {
        (0..ng).map(|i| if i == j { MPoly::constant(nvars, c.clone()) } else { MPoly::zero(nvars) }).collect()
    };
    let mut g: Vec<MPoly> = Vec::new();
    let mut cof: Vec<Vec<MPoly>> = Vec::new();
    for (j, f) in gens.iter().enumerate() {
        if let Some((_, c)) = leading(f, order) {
            let inv = c.recip();
            g.push(f.scale(&inv));
            cof.push(unit(j, &inv));
        }
    }
    let mut steps = 0usize;
    let mut pairs: VecDeque<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop_front() {
        let li = leading(&g[i], order).unwrap().0;
        let lj = leading(&g[j], order).unwrap().0;
        if li.gcd(&lj).is_one() {
            continue;
        }
        let (s, mi, mj) = spoly(&g[i], &li, &g[j], &lj);
        let one = Rat::one();
        let mut scof: Vec<MPoly> = cof[i].iter().map(|c| c.mul_term(&mi, &one)).collect();
        for (o, c) in scof.iter_mut().zip(&cof[j]) {
            *o = &*o - &c.mul_term(&mj, &one);
        }
        let mut red = Reducer::new(order, &g, guard.max_steps - steps.min(guard.max_steps));
        let (q, r) = red.divide(&s)?;
        steps += red.steps;
        if r.is_zero() {
            continue;
        }
        let rc = combine_cofactors(&scof, &q, &cof);
        let inv = leading(&r, order).unwrap().1.recip();
        g.push(r.scale(&inv));
        cof.push(scale_all(&rc, &inv));
        let k = g.len() - 1;
        if leading(&g[k], order).unwrap().0.is_one() {
            break;
        }
        pairs.extend((0..k).map(|i| (i, k)));
    }
    // unit ideal shortcut
    if let Some(k) = g.iter().position(|p| leading(p, order).unwrap().0.is_one()) {
        let mut gb = GroebnerBasis {
            order,
            nvars,
            generators: gens.to_vec(),
            elements: vec![g[k].clone()],
            cofactors: vec![cof[k].clone()],
            syzygies: vec![],
            expansions: vec![],
        };
        gb.finish()?;
        return Ok(gb);
    }
    // minimalize
    let leads: Vec<Monomial> = g.iter().map(|p| leading(p, order).unwrap().0).collect();
    let keep: Vec<usize> = (0..g.len())
        .filter(|&i| {
            !(0..g.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let mut g: Vec<MPoly> = keep.iter().map(|&i| g[i].clone()).collect();
    let mut cof: Vec<Vec<MPoly>> = keep.iter().map(|&i| cof[i].clone()).collect();
    // interreduce
    for i in 0..g.len() {
        let others: Vec<MPoly> = g.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        let other_cof: Vec<Vec<MPoly>> =
            cof.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, c)| c.clone()).collect();
        let mut red = Reducer::new(order, &others, usize::MAX);
        let (q, r) = red.divide(&g[i])?;
        cof[i] = combine_cofactors(&cof[i], &q, &other_cof);
        g[i] = r;
    }
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&leading(&g[a], order).unwrap().0, &leading(&g[b], order).unwrap().0));
    let mut gb = GroebnerBasis {
        order,
        nvars,
        generators: gens.to_vec(),
        elements: idx.iter().map(|&i| g[i].clone()).collect(),
        cofactors: idx.iter().map(|&i| cof[i].clone()).collect(),
        syzygies: vec![],
        expansions: vec![],
    };
    gb.finish()?;
    Ok(gb)
}

impl GroebnerBasis {
    fn finish(&mut self) -> Result<()> {
        let n = self.elements.len();
        let one = Rat::one();
        let leads: Vec<Monomial> = self.elements.iter().map(|p| self.lead(p).0).collect();
        let mut syz = Vec::new();
        for j in 0..n {
            for i in 0..j {
                let (s, mi, mj) = spoly(&self.elements[i], &leads[i], &self.elements[j], &leads[j]);
                let (q, r) = self.divide(&s);
                if !r.is_zero() {
                    return Err(Error::Consistency("S-pair of the final basis does not reduce to zero".into()));
                }
                let mut v: Vec<MPoly> = q.iter().map(|p| -p).collect();
                v[i] = &v[i] + &MPoly::term(self.nvars, mi, one.clone());
                v[j] = &v[j] - &MPoly::term(self.nvars, mj, one.clone());
                syz.push(v);
            }
        }
        self.syzygies = syz;
        let mut exps = Vec::new();
        for f in &self.generators {
            let (q, r) = self.divide(f);
            if !r.is_zero() {
                return Err(Error::Consistency("generator not reduced to zero by its Gröbner basis".into()));
            }
            exps.push(q);
        }
        self.expansions = exps;
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn elements(&self) -> &[MPoly] {
        &self.elements
    }

    pub fn cofactors(&self) -> &[Vec<MPoly>] {
        &self.cofactors
    }

    pub fn syzygies(&self) -> &[Vec<MPoly>] {
        &self.syzygies
    }

    pub fn expansions(&self) -> &[Vec<MPoly>] {
        &self.expansions
    }

    pub fn lead(&self, p: &MPoly) -> (Monomial, Rat) {
        leading(p, self.order).expect("nonzero polynomial")
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| self.lead(p).0).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.lead(&self.elements[0]).0.is_one()
    }

    /// `p = Σ q_k G_k + r` with `r` the normal form.
    pub fn divide(&self, p: &MPoly) -> (Vec<MPoly>, MPoly) {
        Reducer::new(self.order, &self.elements, usize::MAX).divide(p).expect("unbounded budget")
    }

    pub fn normal_form(&self, p: &MPoly) -> MPoly {
        self.divide(p).1
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        self.normal_form(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MPoly {
        MPoly::parse(s, n).unwrap()
    }

    fn check_cofactors(gb: &GroebnerBasis) {
        for (g, c) in gb.elements().iter().zip(gb.cofactors()) {
            let mut acc = MPoly::zero(gb.nvars());
            for (cj, fj) in c.iter().zip(gb.generators()) {
                acc = &acc + &(cj * fj);
            }
            assert_eq!(&acc, g);
        }
        for s in gb.syzygies() {
            let mut acc = MPoly::zero(gb.nvars());
            for (sk, gk) in s.iter().zip(gb.elements()) {
                acc = &acc + &(sk * gk);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn principal() {
        let gb = buchberger(&[p("x0^3", 1)], MonomialOrder::GrLex).unwrap();
        assert_eq!(gb.elements(), &[p("x0^3", 1)]);
    }

    #[test]
    fn circle_line_lex() {
        // x0 plays y, x1 plays x
        let gb = buchberger(&[p("1 - x1^2 - x0^2", 2), p("x1^2 - x1", 2)], MonomialOrder::Lex).unwrap();
        assert_eq!(gb.elements(), &[p("x1^2 - x1", 2), p("x0^2 + x1 - 1", 2)]);
        check_cofactors(&gb);
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&[p("x0 - 1", 1), p("x0 + 1", 1)], MonomialOrder::GrLex).unwrap();
        assert!(gb.is_unit());
        check_cofactors(&gb);
    }

    #[test]
    fn cofactors_for_a_nontrivial_basis() {
        let gb = buchberger(&[p("x0^2*x1 - x1^2", 2), p("x0*x1^2 - x0", 2)], MonomialOrder::GrLex).unwrap();
        check_cofactors(&gb);
        for f in gb.generators() {
            assert!(gb.contains(f));
        }
    }

    #[test]
    fn scope_guard() {
        let r = buchberger(&[p("x0^5", 1)], MonomialOrder::GrLex);
        assert!(matches!(r, Err(Error::ScopeExceeded(_))));
        let r = buchberger(&[p("x0 + x1 + x2 + x3", 4)], MonomialOrder::GrLex);
        assert!(matches!(r, Err(Error::ScopeExceeded(_))));
    }
}
