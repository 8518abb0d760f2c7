//! Canonical distractions of monomial ideals and the fans they produce.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::fan::{Fan, LinearPrime};
use super::hilbert::hilbert;
use super::monomial::MonomialIdeal;
use crate::kernel::rat::{fmt_rat, int};
use crate::kernel::{MPoly, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistractionAssignment {
    /// `(i, j) -> t_{ij}` with slots `j` counted from 1.
    t: BTreeMap<(usize, usize), Rat>,
}

impl DistractionAssignment {
    pub fn new(t: BTreeMap<(usize, usize), Rat>) -> Result<Self> {
        let mut seen: BTreeMap<usize, Vec<&Rat>> = BTreeMap::new();
        for (&(i, j), v) in &t {
            if j == 0 {
                return Err(Error::MissingSlot { var: i, slot: 0 });
            }
            let vals = seen.entry(i).or_default();
            if vals.contains(&v) {
                return Err(Error::NotGeneric(format!("t[{i}][*] repeats the value {}", fmt_rat(v))));
            }
            vals.push(v);
        }
        Ok(DistractionAssignment { t })
    }

    /// `values[i]` lists `t_{i,1}, t_{i,2}, ...` for variable `i`.
    pub fn from_lists(values: &[(usize, Vec<Rat>)]) -> Result<Self> {
        let mut t = BTreeMap::new();
        for (i, vals) in values {
            for (j, v) in vals.iter().enumerate() {
                t.insert((*i, j + 1), v.clone());
            }
        }
        Self::new(t)
    }

    /// Slot-wise distinct integers in `[-12, 12]`, drawn for every slot the ideal needs.
    pub fn seeded(ideal: &MonomialIdeal, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = BTreeMap::new();
        for i in ideal.support() {
            let mut pool: Vec<i64> = (-12..=12).collect();
            pool.shuffle(&mut rng);
            for j in 1..=ideal.max_exponent(i) as usize {
                t.insert((i, j), int(pool[j - 1]));
            }
        }
        DistractionAssignment { t }
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Rat> {
        self.t.get(&(i, j)).ok_or(Error::MissingSlot { var: i, slot: j })
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.t.iter().map(|(&(i, j), v)| (i, j, v))
    }
}

#[derive(Serialize)]
struct Slot<'a> {
    var: usize,
    slot: usize,
    #[serde(with = "crate::kernel::rat::serde_rat")]
    value: &'a Rat,
}

impl Serialize for DistractionAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries().map(|(var, slot, value)| Slot { var, slot, value }))
    }
}

/// One product `∏_i ∏_{j <= s_i} (x_i - t_{ij} x0)` per minimal generator.
/// No distinctness is required here, so an all-zero assignment returns `I` itself.
pub fn canonical_distraction(ideal: &MonomialIdeal, t: &BTreeMap<(usize, usize), Rat>) -> Result<Vec<MPoly>> {
    let nvars = ideal.nvars();
    let mut out = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        if g.0[0] > 0 {
            return Err(Error::UnsupportedSupport { from: 1, to: nvars - 1 });
        }
        let mut prod = MPoly::one(nvars);
        for i in 1..nvars {
            for j in 1..=g.0[i] as usize {
                let tij = t.get(&(i, j)).ok_or(Error::MissingSlot { var: i, slot: j })?;
                let factor = &MPoly::var(nvars, i) - &MPoly::var(nvars, 0).scale(tij);
                prod = &prod * &factor;
            }
        }
        out.push(prod);
    }
    Ok(out)
}

impl DistractionAssignment {
    pub fn distraction(&self, ideal: &MonomialIdeal) -> Result<Vec<MPoly>> {
        canonical_distraction(ideal, &self.t)
    }
}

/// The fan of minimal primes of the distraction of `I`, for `I` generated by
/// monomials in `x_{k+1}, ..., x_n`. The result must keep the Hilbert polynomial of `I`.
pub fn distraction_fan(ideal: &MonomialIdeal, t: &DistractionAssignment, k: usize) -> Result<Fan> {
    let nvars = ideal.nvars();
    let support = ideal.support();
    if support.iter().any(|&i| i <= k) {
        return Err(Error::UnsupportedSupport { from: k + 1, to: nvars - 1 });
    }
    if ideal.is_unit() {
        return Fan::new(nvars, k, vec![]);
    }
    let slots: Vec<(usize, usize)> = support.iter().map(|&i| (i, ideal.max_exponent(i) as usize)).collect();
    for &(i, s) in &slots {
        for j in 1..=s {
            t.get(i, j)?;
        }
    }
    // choice[v] = 0 leaves x_i out, otherwise picks the slot
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    loop {
        let contains = ideal.gens().iter().all(|g| {
            slots.iter().zip(&choice).any(|(&(i, _), &c)| c > 0 && c <= g.0[i] as usize)
        });
        if contains {
            candidates.push(choice.clone());
        }
        let mut v = 0;
        while v < slots.len() {
            choice[v] += 1;
            if choice[v] <= slots[v].1 {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
        if v == slots.len() {
            break;
        }
    }
    let below = |a: &[usize], b: &[usize]| a.iter().zip(b).all(|(&x, &y)| x == 0 || x == y);
    let minimal: Vec<&Vec<usize>> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d != *c && below(d, c)))
        .collect();
    let comps = minimal
        .iter()
        .map(|c| {
            let terms = slots
                .iter()
                .zip(c.iter())
                .filter(|(_, &s)| s > 0)
                .map(|(&(i, _), &s)| Ok((i, t.get(i, s)?.clone())))
                .collect::<Result<Vec<_>>>()?;
            LinearPrime::new(terms)
        })
        .collect::<Result<Vec<_>>>()?;
    let fan = Fan::new(nvars, k, comps).map_err(|e| Error::NotGeneric(format!("candidate primes collide: {e}")))?;
    let expected = hilbert(ideal).hilbert_polynomial;
    let got = fan.hilbert_polynomial()?;
    if got != expected {
        return Err(Error::NotGeneric(format!("Hilbert polynomial {got} of the fan differs from {expected}")));
    }
    Ok(fan)
}

/// `σ_a: x_i ↦ a·x_i` for `i > k`, applied to each generator.
pub fn sigma_family(generators: &[MPoly], k: usize, a: &Rat) -> Result<Vec<MPoly>> {
    use num_traits::Zero;
    if a.is_zero() {
        return Err(Error::ZeroScaling);
    }
    generators
        .iter()
        .map(|g| {
            let nvars = g.nvars();
            let subs: Vec<MPoly> = (0..nvars)
                .map(|i| if i <= k { MPoly::var(nvars, i) } else { MPoly::var(nvars, i).scale(a) })
                .collect();
            g.substitute(&subs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{rat, vec_of};

    fn thick() -> MonomialIdeal {
        MonomialIdeal::parse("x2^2, x2*x3, x3^2", 4).unwrap()
    }

    fn assignment() -> DistractionAssignment {
        DistractionAssignment::from_lists(&[(2, vec_of(&[1, 2])), (3, vec_of(&[3, 4]))]).unwrap()
    }

    #[test]
    fn distraction_generators() {
        let gens = assignment().distraction(&thick()).unwrap();
        let expect = [
            "x2*x3 - 3*x0*x2 - x0*x3 + 3*x0^2",
            "x2^2 - 3*x0*x2 + 2*x0^2",
            "x3^2 - 7*x0*x3 + 12*x0^2",
        ];
        let mut got: Vec<MPoly> = gens.clone();
        got.sort_by_key(|p| p.to_string());
        let mut want: Vec<MPoly> = expect.iter().map(|s| MPoly::parse(s, 4).unwrap()).collect();
        want.sort_by_key(|p| p.to_string());
        assert_eq!(got, want);
        let zeros: BTreeMap<(usize, usize), Rat> = [(2, 1), (2, 2), (3, 1), (3, 2)].into_iter().map(|s| (s, int(0))).collect();
        let zero = canonical_distraction(&thick(), &zeros).unwrap();
        assert_eq!(zero, thick().to_polys());
    }

    #[test]
    fn three_lines() {
        let fan = distraction_fan(&thick(), &assignment(), 1).unwrap();
        let expect = Fan::parse("(x2 - x0, x3 - 3*x0); (x2 - 2*x0, x3 - 3*x0); (x2 - x0, x3 - 4*x0)", 4, 1).unwrap();
        assert_eq!(fan, expect);
        assert!(fan.disjoint_from_e());
    }

    #[test]
    fn single_variable() {
        let i = MonomialIdeal::parse("x1", 3).unwrap();
        let t = DistractionAssignment::from_lists(&[(1, vec![rat(5, 2)])]).unwrap();
        let fan = distraction_fan(&i, &t, 0).unwrap();
        assert_eq!(fan.to_string(), "{(x1 - 5/2*x0)}");
    }

    #[test]
    fn repeated_slot_rejected() {
        assert!(matches!(
            DistractionAssignment::from_lists(&[(2, vec_of(&[1, 1])), (3, vec_of(&[3, 4]))]),
            Err(Error::NotGeneric(_))
        ));
        let short = DistractionAssignment::from_lists(&[(2, vec_of(&[1])), (3, vec_of(&[3, 4]))]).unwrap();
        assert!(matches!(distraction_fan(&thick(), &short, 1), Err(Error::MissingSlot { var: 2, slot: 2 })));
        assert!(distraction_fan(&MonomialIdeal::parse("x1*x2", 4).unwrap(), &assignment(), 1).is_err());
    }

    #[test]
    fn seeded_assignments_are_generic_here() {
        for seed in 0..10 {
            let t = DistractionAssignment::seeded(&thick(), seed);
            let fan = distraction_fan(&thick(), &t, 1).unwrap();
            assert_eq!(fan.components().len(), 3);
        }
    }

    #[test]
    fn sigma() {
        let gens = vec![MPoly::parse("x0*x2 - x1^2", 4).unwrap(), MPoly::parse("x3^2 - x0*x1", 4).unwrap()];
        assert_eq!(sigma_family(&gens, 1, &int(1)).unwrap(), gens);
        let half = sigma_family(&gens, 1, &rat(1, 2)).unwrap();
        assert_eq!(half[0], MPoly::parse("1/2*x0*x2 - x1^2", 4).unwrap());
        assert_eq!(half[1], MPoly::parse("1/4*x3^2 - x0*x1", 4).unwrap());
        assert!(matches!(sigma_family(&gens, 1, &int(0)), Err(Error::ZeroScaling)));
    }
}
