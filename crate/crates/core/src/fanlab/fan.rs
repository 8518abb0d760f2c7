//! Fans: finite unions of linear subspaces cut out by primes
//! `(x_{j_1} - a_1 x0, ..., x_{j_r} - a_r x0)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::hilbert::hilbert;
use super::monomial::{for_each_monomial, MonomialIdeal};
use crate::kernel::linalg::{self, Mat};
use crate::kernel::rat::{fmt_rat, int};
use crate::kernel::{MPoly, Monomial, Rat, UPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearPrime {
    /// `(j, a)` stands for the generator `x_j - a x0`; indices strictly increase.
    terms: Vec<(usize, Rat)>,
}

impl LinearPrime {
    pub fn new(terms: Vec<(usize, Rat)>) -> Result<Self> {
        if terms.iter().any(|(j, _)| *j == 0) {
            return Err(Error::InvalidFan("x0 cannot be a fan variable".into()));
        }
        if terms.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidFan("variable indices must strictly increase".into()));
        }
        Ok(LinearPrime { terms })
    }

    /// Reads `"x2 - x0, x3 - 3*x0"`; each form must involve one `x_j` with `j >= 1`
    /// and optionally `x0`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let mut terms = Vec::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let p = MPoly::parse(part, nvars)?;
            let c = p.linear_coeffs().ok_or(Error::NotLinear)?;
            let support: Vec<usize> = (1..nvars).filter(|&j| !c[j].is_zero()).collect();
            if support.len() != 1 {
                return Err(Error::InvalidFan(format!("`{}` is not of the form x_j - a*x0", part.trim())));
            }
            let j = support[0];
            terms.push((j, -&c[0] / &c[j]));
        }
        terms.sort_by_key(|t| t.0);
        Self::new(terms)
    }

    pub fn terms(&self) -> &[(usize, Rat)] {
        &self.terms
    }

    pub fn vars(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.0).collect()
    }

    pub fn coeff(&self, j: usize) -> Option<&Rat> {
        self.terms.iter().find(|t| t.0 == j).map(|t| &t.1)
    }

    /// Largest variable index, `m_j` in the invariant definitions.
    pub fn last_index(&self) -> Option<usize> {
        self.terms.last().map(|t| t.0)
    }

    /// Projective dimension inside `P^(nvars - 1)`.
    pub fn dim(&self, nvars: usize) -> i64 {
        nvars as i64 - 1 - self.terms.len() as i64
    }

    /// All coefficients zero except possibly the last one.
    pub fn is_tight(&self) -> bool {
        let r = self.terms.len();
        self.terms.iter().take(r.saturating_sub(1)).all(|t| t.1.is_zero())
    }

    pub fn generator_vectors(&self, nvars: usize) -> Mat {
        self.terms
            .iter()
            .map(|(j, a)| {
                let mut v = vec![Rat::zero(); nvars];
                v[0] = -a;
                v[*j] = Rat::one();
                v
            })
            .collect()
    }

    pub fn generators(&self, nvars: usize) -> Vec<MPoly> {
        self.generator_vectors(nvars).iter().map(|v| MPoly::linear_form(v)).collect()
    }

    /// `self ⊆ other` as ideals: every generator lies in the span of the other's generators.
    pub fn is_contained_in(&self, other: &LinearPrime, nvars: usize) -> bool {
        let theirs = other.generator_vectors(nvars);
        let mut both = theirs.clone();
        both.extend(self.generator_vectors(nvars));
        linalg::rank(&both) == linalg::rank(&theirs)
    }

    /// Image of a monomial in `S / P`, which is a polynomial ring in the remaining variables.
    fn restrict_monomial(&self, m: &Monomial) -> Option<(Monomial, Rat)> {
        let mut e = m.0.clone();
        let mut c = Rat::one();
        for (j, a) in &self.terms {
            let k = e[*j];
            if k > 0 {
                if a.is_zero() {
                    return None;
                }
                c *= num_traits::pow(a.clone(), k as usize);
                e[0] += k;
                e[*j] = 0;
            }
        }
        Some((Monomial(e), c))
    }
}

impl fmt::Display for LinearPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(j, a)| {
                if a.is_zero() {
                    format!("x{j}")
                } else if a.is_one() {
                    format!("x{j} - x0")
                } else if *a == -Rat::one() {
                    format!("x{j} + x0")
                } else if a > &Rat::zero() {
                    format!("x{j} - {}*x0", fmt_rat(a))
                } else {
                    format!("x{j} + {}*x0", fmt_rat(&-a))
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for LinearPrime {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Irredundancy of a list of primes, decided by linear algebra.
pub fn is_fan(primes: &[LinearPrime], nvars: usize) -> bool {
    primes.iter().all(|p| p.last_index().map_or(true, |m| m < nvars))
        && primes
            .iter()
            .enumerate()
            .all(|(i, p)| primes.iter().enumerate().all(|(j, q)| i == j || !q.is_contained_in(p, nvars)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fan {
    nvars: usize,
    /// `E = V(x0, ..., xk)`.
    k: usize,
    components: Vec<LinearPrime>,
}

impl Fan {
    pub fn new(nvars: usize, k: usize, mut components: Vec<LinearPrime>) -> Result<Self> {
        if k + 1 >= nvars {
            return Err(Error::InvalidFan(format!("k = {k} leaves no coordinates outside E")));
        }
        if let Some(m) = components.iter().filter_map(|p| p.last_index()).find(|&m| m >= nvars) {
            return Err(Error::InvalidFan(format!("x{m} is not a coordinate of P^{}", nvars - 1)));
        }
        if !is_fan(&components, nvars) {
            return Err(Error::InvalidFan("one component contains another".into()));
        }
        components.sort();
        Ok(Fan { nvars, k, components })
    }

    /// Like [`Fan::new`] but drops redundant components instead of failing.
    pub fn minimal(nvars: usize, k: usize, components: Vec<LinearPrime>) -> Result<Self> {
        let mut keep: Vec<LinearPrime> = Vec::new();
        for (i, p) in components.iter().enumerate() {
            let redundant = components.iter().enumerate().any(|(j, q)| {
                j != i && q.is_contained_in(p, nvars) && (!p.is_contained_in(q, nvars) || j < i)
            });
            if !redundant {
                keep.push(p.clone());
            }
        }
        Self::new(nvars, k, keep)
    }

    /// Reads `"(x2 - x0, x3); (x2, x3 - x0)"`.
    pub fn parse(s: &str, nvars: usize, k: usize) -> Result<Self> {
        let comps = s
            .split(';')
            .filter(|c| !c.trim().is_empty())
            .map(|c| LinearPrime::parse(c.trim().trim_start_matches('(').trim_end_matches(')'), nvars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, k, comps)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Ambient projective dimension.
    pub fn n(&self) -> usize {
        self.nvars - 1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[LinearPrime] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.components.iter().map(|p| p.dim(self.nvars)).max().unwrap_or(-1)
    }

    pub fn is_tight(&self) -> bool {
        self.components.iter().all(|p| p.is_tight())
    }

    /// No component meets `E = V(x0, ..., xk)`: each must involve every `x_{k+1}, ..., x_n`.
    pub fn disjoint_from_e(&self) -> bool {
        fan_disjoint_from_e(self, self.k)
    }

    /// Dimension of the image of `S_d` in `⊕ (S / P_j)_d`.
    pub fn hilbert_function(&self, d: u32) -> usize {
        let mut monomials: BTreeMap<Monomial, usize> = BTreeMap::new();
        for_each_monomial(self.nvars, d, &mut |m| {
            let next = monomials.len();
            monomials.insert(m.clone(), next);
        });
        let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, Rat)>> = BTreeMap::new();
        for (m, &col) in &monomials {
            for (ci, p) in self.components.iter().enumerate() {
                if let Some((img, c)) = p.restrict_monomial(m) {
                    rows.entry((ci, img)).or_default().push((col, c));
                }
            }
        }
        linalg::sparse_rank(rows.into_values())
    }

    /// Hilbert polynomial, interpolated from the Hilbert function past the
    /// regularity bound for subspace arrangements and checked one degree further.
    pub fn hilbert_polynomial(&self) -> Result<UPoly> {
        if self.components.is_empty() {
            return Ok(UPoly::zero());
        }
        let top = self.dim().max(0) as u32;
        let start = self.components.len() as u32;
        let columns = monomial_count(self.nvars, start + top + 1);
        if columns > FAN_RANK_BUDGET {
            return Err(Error::ScopeExceeded(format!(
                "fan Hilbert function needs {columns} monomials in degree {}, budget {FAN_RANK_BUDGET}",
                start + top + 1
            )));
        }
        let xs: Vec<Rat> = (start..=start + top).map(|d| int(d as i64)).collect();
        let ys: Vec<Rat> = (start..=start + top).map(|d| int(self.hilbert_function(d) as i64)).collect();
        let hp = interpolate(&xs, &ys);
        let check = start + top + 1;
        if hp.eval(&int(check as i64)) != int(self.hilbert_function(check) as i64) {
            return Err(Error::Consistency(format!("fan Hilbert function is not polynomial at degree {check}")));
        }
        Ok(hp)
    }

    fn sub_fan(&self, keep: impl Fn(&LinearPrime) -> bool) -> Fan {
        Fan { nvars: self.nvars, k: self.k, components: self.components.iter().filter(|p| keep(p)).cloned().collect() }
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Largest number of degree-`d` monomials the rank computation of the fan Hilbert function accepts.
pub const FAN_RANK_BUDGET: u128 = 1500;

fn monomial_count(nvars: usize, d: u32) -> u128 {
    let (n, k) = (d as u128 + nvars as u128 - 1, nvars as u128 - 1);
    (1..=k).fold(1u128, |acc, i| acc * (n - k + i) / i)
}

pub fn is_tight_fan(fan: &Fan) -> bool {
    fan.is_tight()
}

pub fn fan_disjoint_from_e(fan: &Fan, k: usize) -> bool {
    fan.components.iter().all(|p| (k + 1..fan.nvars).all(|j| p.coeff(j).is_some()))
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> UPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut p = UPoly::zero();
    for i in (0..n).rev() {
        p = &(&p * &UPoly::new(vec![-&xs[i], Rat::one()])) + &UPoly::constant(coef[i].clone());
    }
    p
}

/// The largest `p` in `ell..=n+1` such that every component has zero coefficients
/// at all its indices below `min(p, m_j)`.
pub fn p_invariant(fan: &Fan, ell: usize) -> Result<usize> {
    if fan.is_empty() {
        return Err(Error::EmptyFan);
    }
    if fan.components.iter().any(|c| c.terms.first().is_some_and(|t| t.0 < ell)) {
        return Err(Error::InvalidFan(format!("a component involves a variable below x{ell}")));
    }
    let ok = |p: usize| {
        fan.components.iter().all(|c| {
            let m = c.last_index().unwrap_or(0);
            c.terms.iter().all(|(r, a)| *r >= p.min(m) || a.is_zero())
        })
    };
    Ok((ell..=fan.nvars).rev().find(|&p| ok(p)).unwrap_or(ell))
}

impl Fan {
    /// [`p_invariant`] with `ell = k + 1`.
    pub fn p_invariant(&self) -> Result<usize> {
        p_invariant(self, self.k + 1)
    }
}

fn factorial(i: usize) -> Rat {
    (1..=i as i64).map(int).fold(Rat::one(), |a, b| a * b)
}

fn integral(r: &Rat) -> Result<i64> {
    use num_traits::ToPrimitive;
    if !r.is_integer() {
        return Err(Error::Consistency(format!("non-integral n_* entry {r}")));
    }
    r.to_integer().to_i64().ok_or_else(|| Error::Consistency("n_* entry overflows".into()))
}

/// `(n_K, ..., n_0)` with `n_i = i! [z^i](HP(X) - HP(X_{>i}))`, where `X_{>i}`
/// is the union of the components of dimension above `i`.
pub fn n_star(fan: &Fan) -> Result<Vec<i64>> {
    if fan.is_empty() {
        return Ok(vec![]);
    }
    let top = fan.dim() as usize;
    let hp = fan.hilbert_polynomial()?;
    let mut out = Vec::with_capacity(top + 1);
    for i in (0..=top).rev() {
        let above = fan.sub_fan(|p| p.dim(fan.nvars) > i as i64).hilbert_polynomial()?;
        let diff = &hp - &above;
        out.push(integral(&(diff.coeff(i) * factorial(i)))?);
    }
    Ok(out)
}

/// `n_*` of `V(I)` for a monomial ideal. Radical ideals go through their fan of
/// coordinate subspaces; unmixed ideals of dimension `D` give `(deg, 0, ..., 0)`.
pub fn n_star_monomial(ideal: &MonomialIdeal) -> Result<Vec<i64>> {
    if ideal.is_radical() {
        let primes = ideal.minimal_primes();
        if primes.iter().any(|s| s.contains(&0)) {
            return Err(Error::Unsupported("a minimal prime contains x0".into()));
        }
        let comps = primes
            .into_iter()
            .map(|s| LinearPrime::new(s.into_iter().map(|j| (j, Rat::zero())).collect()))
            .collect::<Result<Vec<_>>>()?;
        let fan = Fan::new(ideal.nvars(), 0, comps)?;
        return n_star(&fan);
    }
    if ideal.is_unmixed() {
        let data = hilbert(ideal);
        if data.dim < 0 {
            return Ok(vec![]);
        }
        let mut out = vec![0; data.dim as usize + 1];
        out[0] = data.degree;
        return Ok(out);
    }
    Err(Error::Unsupported("n_* of a non-reduced scheme with embedded or mixed components".into()))
}

/// Pointwise `a >= b`, aligning at `n_0`.
pub fn n_star_geq(a: &[i64], b: &[i64]) -> bool {
    let len = a.len().max(b.len());
    let pad = |v: &[i64]| {
        let mut w = vec![0; len - v.len()];
        w.extend_from_slice(v);
        w
    };
    pad(a).iter().zip(pad(b).iter()).all(|(x, y)| x >= y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::vec_of;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(4, 3), 20);
        assert_eq!(monomial_count(5, 11), 1365);
        assert_eq!(monomial_count(1, 7), 1);
    }

    #[test]
    fn oversized_fans_are_refused() {
        let comps = (0..12).map(|a| LinearPrime::new(vec![(4, int(a))]).unwrap()).collect();
        let fan = Fan::new(5, 3, comps).unwrap();
        assert!(matches!(fan.hilbert_polynomial(), Err(Error::ScopeExceeded(_))));
    }

    fn fan(s: &str) -> Fan {
        Fan::parse(s, 4, 1).unwrap()
    }

    fn three_lines() -> Fan {
        fan("(x2 - x0, x3 - 3*x0); (x2 - 2*x0, x3 - 3*x0); (x2 - x0, x3 - 4*x0)")
    }

    #[test]
    fn parse_and_display() {
        let f = three_lines();
        assert_eq!(f.components().len(), 3);
        let again = Fan::parse(&f.to_string().trim_matches(|c| c == '{' || c == '}').replace("), (", "); ("), 4, 1).unwrap();
        assert_eq!(again, f);
        assert!(LinearPrime::parse("x2 + x3", 4).is_err());
        assert!(Fan::parse("(x2); (x2, x3)", 4, 1).is_err());
        assert_eq!(Fan::minimal(4, 1, fan("(x2)").components().iter().chain(fan("(x2, x3)").components()).cloned().collect()).unwrap(), fan("(x2)"));
    }

    #[test]
    fn containment_is_linear_algebra() {
        let p = LinearPrime::parse("x2 - x0", 4).unwrap();
        let q = LinearPrime::parse("x2 - x0, x3", 4).unwrap();
        let r = LinearPrime::parse("x2, x3", 4).unwrap();
        assert!(p.is_contained_in(&q, 4));
        assert!(!q.is_contained_in(&p, 4));
        assert!(!p.is_contained_in(&r, 4));
    }

    #[test]
    fn hilbert_polynomials() {
        assert_eq!(three_lines().hilbert_polynomial().unwrap(), UPoly::new(vec_of(&[1, 3])));
        // three concurrent coplanar lines form a plane cubic
        let coplanar = fan("(x2, x3 - x0); (x2, x3 - 2*x0); (x2, x3 - 3*x0)");
        assert_eq!(coplanar.hilbert_polynomial().unwrap(), UPoly::new(vec_of(&[0, 3])));
        let line_and_point = Fan::parse("(x2, x3); (x1 - x0, x2 - x0, x3 - x0)", 4, 0).unwrap();
        assert_eq!(line_and_point.hilbert_polynomial().unwrap(), UPoly::new(vec_of(&[2, 1])));
        let whole = Fan::new(3, 0, vec![LinearPrime::new(vec![]).unwrap()]).unwrap();
        assert_eq!(whole.hilbert_polynomial().unwrap(), UPoly::new(vec![int(1), crate::kernel::rat::rat(3, 2), crate::kernel::rat::rat(1, 2)]));
    }

    #[test]
    fn p_examples() {
        assert_eq!(fan("(x2 - x0, x3); (x2, x3 - x0)").p_invariant().unwrap(), 2);
        assert_eq!(fan("(x2, x3 - 5*x0)").p_invariant().unwrap(), 4);
        assert_eq!(fan("(x2 - x0, x3 - x0)").p_invariant().unwrap(), 2);
        assert_eq!(fan("(x2, x3 - x0); (x2, x3 + x0)").p_invariant().unwrap(), 4);
        assert!(Fan::new(4, 1, vec![]).unwrap().p_invariant().is_err());
    }

    #[test]
    fn tightness() {
        assert!(fan("(x2, x3 - x0)").is_tight());
        assert!(!fan("(x2 - x0, x3)").is_tight());
        assert!(!three_lines().is_tight());
        for f in [fan("(x2, x3 - x0)"), fan("(x2 - x0, x3)"), three_lines()] {
            assert_eq!(f.is_tight(), f.p_invariant().unwrap() == f.n() + 1);
        }
    }

    #[test]
    fn disjointness() {
        assert!(three_lines().disjoint_from_e());
        assert!(!fan("(x2 - x0)").disjoint_from_e());
        assert!(Fan::new(4, 1, vec![]).unwrap().disjoint_from_e());
    }

    #[test]
    fn n_star_examples() {
        assert_eq!(n_star(&three_lines()).unwrap(), vec![3, 0]);
        let line_and_point = Fan::parse("(x2, x3); (x1 - x0, x2 - x0, x3 - x0)", 4, 0).unwrap();
        assert_eq!(n_star(&line_and_point).unwrap(), vec![1, 1]);
        assert_eq!(n_star(&fan("(x2, x3)")).unwrap(), vec![1, 0]);
        let thick = MonomialIdeal::parse("x2^2, x2*x3, x3^2", 4).unwrap();
        assert_eq!(n_star_monomial(&thick).unwrap(), vec![3, 0]);
        let cross = MonomialIdeal::parse("x2*x3, x1*x3", 4).unwrap();
        assert_eq!(n_star_monomial(&cross).unwrap(), n_star(&Fan::parse("(x3); (x1, x2)", 4, 0).unwrap()).unwrap());
        assert!(n_star_monomial(&MonomialIdeal::parse("x1^2, x1*x2", 4).unwrap()).is_err());
        assert!(n_star_geq(&[3, 0], &[3, 0]));
        assert!(n_star_geq(&[1, 1], &[1]));
        assert!(!n_star_geq(&[1], &[1, 1]));
    }
}
