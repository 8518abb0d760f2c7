//! The deformation path from a scheme on `E^⊥` to a tight fan: σ_a scaling,
//! distraction, and the tightening steps that raise `p`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::distraction::{distraction_fan, sigma_family, DistractionAssignment};
use super::fan::{n_star, n_star_monomial, Fan, LinearPrime};
use super::hilbert::{hilbert, HilbertData};
use super::monomial::MonomialIdeal;
use crate::defcheck::groebner::{buchberger_with, MonomialOrder, ScopeGuard};
use crate::kernel::rat::{fmt_rat, int};
use crate::kernel::{MPoly, Monomial, Rat, UPoly};
use crate::{Error, Result};

const PATH_GUARD: ScopeGuard = ScopeGuard { max_vars: 8, max_degree: 12, max_steps: 2_000_000 };

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepKind {
    SigmaScale,
    Distraction,
    TightenStep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub hilbert_polynomial: UPoly,
    pub p: Option<usize>,
    pub n_star: Option<Vec<i64>>,
    pub disjoint_from_e: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub kind: StepKind,
    pub input: String,
    pub output: String,
    pub parameters: BTreeMap<String, String>,
    pub before: Snapshot,
    pub after: Snapshot,
    pub no_op: bool,
}

impl PathStep {
    /// Same Hilbert polynomial on both ends and disjoint from `E` throughout.
    pub fn is_valid(&self) -> bool {
        self.before.hilbert_polynomial == self.after.hilbert_polynomial
            && self.before.disjoint_from_e
            && self.after.disjoint_from_e
    }
}

/// Hilbert data of `S / (gens)` through the lead ideal of a degree-compatible Gröbner basis.
pub fn ideal_hilbert(gens: &[MPoly]) -> Result<HilbertData> {
    let nvars = gens.first().map(|g| g.nvars()).ok_or_else(|| Error::Task("no generators".into()))?;
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let nonzero: Vec<MPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(hilbert(&MonomialIdeal::zero(nvars)));
    }
    let gb = buchberger_with(&nonzero, MonomialOrder::GrLex, &PATH_GUARD)?;
    Ok(hilbert(&MonomialIdeal::new(nvars, gb.leading_monomials())?))
}

/// `V(gens) ∩ V(x0, ..., xk) = ∅`, decided exactly.
pub fn scheme_disjoint_from_e(gens: &[MPoly], k: usize) -> Result<bool> {
    let nvars = gens.first().map(|g| g.nvars()).ok_or_else(|| Error::Task("no generators".into()))?;
    let mut all = gens.to_vec();
    all.extend((0..=k).map(|i| MPoly::var(nvars, i)));
    Ok(ideal_hilbert(&all)?.dim < 0)
}

fn scheme_snapshot(gens: &[MPoly], k: usize) -> Result<Snapshot> {
    Ok(Snapshot {
        hilbert_polynomial: ideal_hilbert(gens)?.hilbert_polynomial,
        p: None,
        n_star: None,
        disjoint_from_e: scheme_disjoint_from_e(gens, k)?,
    })
}

fn monomial_snapshot(ideal: &MonomialIdeal, k: usize) -> Snapshot {
    let mut with_e = ideal.clone();
    for i in 0..=k {
        let mut e = vec![0; ideal.nvars()];
        e[i] = 1;
        with_e = with_e.with_generator(&Monomial(e));
    }
    Snapshot {
        hilbert_polynomial: hilbert(ideal).hilbert_polynomial,
        p: None,
        n_star: n_star_monomial(ideal).ok(),
        disjoint_from_e: hilbert(&with_e).dim < 0,
    }
}

pub fn fan_snapshot(fan: &Fan) -> Result<Snapshot> {
    Ok(Snapshot {
        hilbert_polynomial: fan.hilbert_polynomial()?,
        p: if fan.is_empty() { None } else { Some(fan.p_invariant()?) },
        n_star: Some(n_star(fan)?),
        disjoint_from_e: fan.disjoint_from_e(),
    })
}

fn show_polys(gens: &[MPoly]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Applies `σ_a` for `a ≠ 0` and records the step.
pub fn sigma_step(gens: &[MPoly], k: usize, a: &Rat) -> Result<(Vec<MPoly>, PathStep)> {
    let out = sigma_family(gens, k, a)?;
    let step = PathStep {
        kind: StepKind::SigmaScale,
        input: show_polys(gens),
        output: show_polys(&out),
        parameters: [("a".to_string(), fmt_rat(a)), ("k".to_string(), k.to_string())].into(),
        before: scheme_snapshot(gens, k)?,
        after: scheme_snapshot(&out, k)?,
        no_op: a.is_one(),
    };
    Ok((out, step))
}

/// Replaces a monomial ideal on `E^⊥` by the fan of its distraction.
pub fn distraction_step(ideal: &MonomialIdeal, t: &DistractionAssignment, k: usize) -> Result<(Fan, PathStep)> {
    let fan = distraction_fan(ideal, t, k)?;
    let parameters = t.entries().map(|(i, j, v)| (format!("t[{i}][{j}]"), fmt_rat(v))).collect();
    let step = PathStep {
        kind: StepKind::Distraction,
        input: ideal.to_string(),
        output: fan.to_string(),
        parameters,
        before: monomial_snapshot(ideal, k),
        after: fan_snapshot(&fan)?,
        no_op: false,
    };
    Ok((fan, step))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum TightenOutcome {
    Step { fan: Fan, step: PathStep },
    /// The limit is not a fan with the same Hilbert polynomial; only a scheme step can continue.
    NeedsSchemeStep { limit: String, reason: String },
}

fn collide(comps: &[LinearPrime], nvars: usize) -> Option<(usize, usize)> {
    for (i, p) in comps.iter().enumerate() {
        for (j, q) in comps.iter().enumerate() {
            if i != j && p.is_contained_in(q, nvars) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Coefficients of the fiber at `t`: index `p` gets `t (a_p - λ)`,
/// index `p + 1` gets `a_{p+1} - μ a_p`.
fn fiber(fan: &Fan, p: usize, lambda: &Rat, mu: &Rat, t: &Rat) -> Result<Vec<LinearPrime>> {
    fan.components()
        .iter()
        .map(|c| {
            let a_p = c.coeff(p).cloned();
            if a_p.is_none() && c.coeff(p + 1).is_some() && !mu.is_zero() {
                return Err(Error::Unsupported(format!(
                    "component {c} involves x{} but not x{p}; only mu = 0 keeps it linear",
                    p + 1
                )));
            }
            let terms = c
                .terms()
                .iter()
                .map(|(r, a)| {
                    let b = if *r == p {
                        t * (a - lambda)
                    } else if *r == p + 1 {
                        a - mu * a_p.clone().unwrap_or_else(Rat::zero)
                    } else {
                        a.clone()
                    };
                    (*r, b)
                })
                .collect();
            LinearPrime::new(terms)
        })
        .collect()
}

/// One tightening step with parameters `λ, μ` at the fan's `p`.
pub fn tighten_step(fan: &Fan, p: usize, lambda: &Rat, mu: &Rat) -> Result<TightenOutcome> {
    tighten_step_from(fan, fan_snapshot(fan)?, p, lambda, mu)
}

fn tighten_step_from(fan: &Fan, before: Snapshot, p: usize, lambda: &Rat, mu: &Rat) -> Result<TightenOutcome> {
    let parameters: BTreeMap<String, String> =
        [("p", p.to_string()), ("lambda", fmt_rat(lambda)), ("mu", fmt_rat(mu))].map(|(a, b)| (a.to_string(), b)).into();
    if fan.is_tight() {
        let step = PathStep {
            kind: StepKind::TightenStep,
            input: fan.to_string(),
            output: fan.to_string(),
            parameters,
            before: before.clone(),
            after: before,
            no_op: true,
        };
        return Ok(TightenOutcome::Step { fan: fan.clone(), step });
    }
    let actual = fan.p_invariant()?;
    if actual != p {
        return Err(Error::InvalidFan(format!("p = {p} requested but the fan has p = {actual}")));
    }
    let nvars = fan.nvars();
    let general = Fan::new(nvars, fan.k(), fiber(fan, p, lambda, mu, &int(1))?)?;
    if general.hilbert_polynomial()? != before.hilbert_polynomial {
        return Err(Error::Consistency("the coordinate change altered the Hilbert polynomial".into()));
    }
    let limit = fiber(fan, p, lambda, mu, &Rat::zero())?;
    let shown = format!("{{{}}}", limit.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
    if let Some((i, j)) = collide(&limit, nvars) {
        return Ok(TightenOutcome::NeedsSchemeStep {
            limit: shown,
            reason: format!("component {} lies in component {}", limit[j], limit[i]),
        });
    }
    let out = Fan::new(nvars, fan.k(), limit)?;
    let hp = out.hilbert_polynomial()?;
    if hp != before.hilbert_polynomial {
        return Ok(TightenOutcome::NeedsSchemeStep {
            limit: shown,
            reason: format!("Hilbert polynomial drops from {} to {hp}", before.hilbert_polynomial),
        });
    }
    if !out.disjoint_from_e() {
        return Ok(TightenOutcome::NeedsSchemeStep { limit: shown, reason: "the limit meets E".into() });
    }
    let after = fan_snapshot(&out)?;
    let step = PathStep {
        kind: StepKind::TightenStep,
        input: fan.to_string(),
        output: out.to_string(),
        parameters,
        before,
        after,
        no_op: false,
    };
    Ok(TightenOutcome::Step { fan: out, step })
}

/// `0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, ...`, without repeats.
pub fn mu_sequence(budget: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero()];
    let mut n = 1i64;
    while out.len() < budget {
        for v in [int(n), int(-n), Rat::new(1.into(), n.into()), Rat::new((-1).into(), n.into())] {
            if !out.contains(&v) && out.len() < budget {
                out.push(v);
            }
        }
        n += 1;
    }
    out.truncate(budget);
    out
}

pub const DEFAULT_MU_BUDGET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum DriverOutcome {
    Tight { fan: Fan },
    NeedsSchemeStep { fan: String, p: usize, tried: usize, last_reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightenReport {
    pub steps: Vec<PathStep>,
    pub outcome: DriverOutcome,
}

impl TightenReport {
    pub fn final_fan(&self) -> Option<&Fan> {
        match &self.outcome {
            DriverOutcome::Tight { fan } => Some(fan),
            DriverOutcome::NeedsSchemeStep { .. } => None,
        }
    }
}

/// Applies [`tighten_step`] until the fan is tight, trying `λ` in `{a_{p,j}} ∪ {0}`
/// and `μ` along [`mu_sequence`].
pub fn tighten_driver(fan: &Fan, budget: usize) -> Result<TightenReport> {
    if !fan.disjoint_from_e() {
        return Err(Error::InvalidFan("the fan meets E".into()));
    }
    let mut current = fan.clone();
    let mut steps = Vec::new();
    let mus = mu_sequence(budget);
    while !current.is_tight() {
        let p = current.p_invariant()?;
        let mut lambdas: Vec<Rat> = current.components().iter().filter_map(|c| c.coeff(p).cloned()).collect();
        lambdas.push(Rat::zero());
        lambdas.sort();
        lambdas.dedup();
        let before = fan_snapshot(&current)?;
        let mut accepted = None;
        let mut tried = 0;
        let mut last_reason = String::new();
        'search: for mu in &mus {
            for lambda in &lambdas {
                tried += 1;
                match tighten_step_from(&current, before.clone(), p, lambda, mu) {
                    Ok(TightenOutcome::Step { fan, step }) => {
                        let q = fan.p_invariant()?;
                        if q > p || fan.is_tight() {
                            accepted = Some((fan, step));
                            break 'search;
                        }
                        last_reason = format!("p did not increase with mu = {}", fmt_rat(mu));
                    }
                    Ok(TightenOutcome::NeedsSchemeStep { reason, .. }) => last_reason = reason,
                    Err(Error::Unsupported(msg)) => last_reason = msg,
                    Err(e) => return Err(e),
                }
            }
        }
        match accepted {
            Some((next, step)) => {
                steps.push(step);
                current = next;
            }
            None => {
                return Ok(TightenReport {
                    steps,
                    outcome: DriverOutcome::NeedsSchemeStep { fan: current.to_string(), p, tried, last_reason },
                })
            }
        }
    }
    Ok(TightenReport { steps, outcome: DriverOutcome::Tight { fan: current } })
}
