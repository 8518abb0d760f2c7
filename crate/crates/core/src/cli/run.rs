//! Dispatch from task documents to certificates.

use serde::Serialize;
use serde_json::{json, Value};

use super::task::{binary, poly, polys, rats, CheckerSpec, SlotValues, Task, TaskDocument};
use crate::defcheck::{
    buchberger, is_strict, quotient_algebra, restrict_deformation, socle_shortcut, DeformationHom, MonomialOrder,
    SocleOutcome, StrictnessCert, FIRST_ORDER_QUALIFIER,
};
use crate::engine::{
    curve_hyperbolicity, family_scan, hypersurface_scan, nuij_sweeps, quadric_hyperbolicity, specialize,
    CurveVerdict, FiberChecker, RationalCurveParam, ScanVerdict,
};
use crate::fanlab::{
    distraction_step, hilbert, n_star, n_star_monomial, tighten_driver, DistractionAssignment,
    DriverOutcome, Fan, MonomialIdeal,
};
use crate::kernel::rat::{fmt_rat, serde_rat, serde_rat_vec};
use crate::kernel::{ldlt_signature, MPoly, Rat};
use crate::realcert::{
    hermite_matrix, interlace_certificate, newton_power_sums, real_rooted_status, sturm_distinct_real_roots,
    InterlaceVerdict, RootTag,
};
use crate::{Error, Result};

pub const TOOL: &str = "hypcert";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status of a finished run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    Inconclusive,
    Falsified,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Verified => 0,
            Outcome::Falsified => 2,
            Outcome::Inconclusive => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub task: TaskDocument,
    pub seed: Option<u64>,
    pub verdict: String,
    pub outcome: Outcome,
    pub exit_code: i32,
    pub result: Value,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

struct Done {
    verdict: String,
    outcome: Outcome,
    result: Value,
}

fn done(verdict: impl Into<String>, outcome: Outcome, result: Value) -> Result<Done> {
    Ok(Done { verdict: verdict.into(), outcome, result })
}

pub fn run(doc: &TaskDocument) -> Result<Certificate> {
    let d = dispatch(&doc.task)?;
    Ok(Certificate {
        tool: TOOL,
        tool_version: TOOL_VERSION,
        task: doc.clone(),
        seed: doc.task.seed(),
        verdict: d.verdict,
        outcome: d.outcome,
        exit_code: d.outcome.exit_code(),
        result: d.result,
    })
}

fn dispatch(task: &Task) -> Result<Done> {
    match task {
        Task::CheckHypersurface { poly: p, nvars, e, sampler } => {
            let report = hypersurface_scan(&poly(p, *nvars)?, &rats(e), sampler)?;
            let outcome = match report.verdict {
                ScanVerdict::FalsifiedHyperbolic => Outcome::Falsified,
                _ => Outcome::Verified,
            };
            done(format!("{:?}", report.verdict), outcome, to_value(&report))
        }
        Task::CheckCurve { forms, degree, center } => check_curve(forms, *degree, center),
        Task::Quadric { poly: p, nvars, e } => {
            let v = quadric_hyperbolicity(&poly(p, *nvars)?, &rats(e))?;
            let (verdict, outcome) =
                if v.hyperbolic { ("Hyperbolic", Outcome::Verified) } else { ("NotHyperbolic", Outcome::Falsified) };
            done(verdict, outcome, to_value(&v))
        }
        Task::Bezout { p, q, degree } => {
            let cert = interlace_certificate(&binary(p, *degree)?, &binary(q, *degree)?)?;
            let outcome = match cert.verdict {
                InterlaceVerdict::StrictlyInterlacing => Outcome::Verified,
                InterlaceVerdict::NotStrictlyInterlacing => Outcome::Falsified,
            };
            done(format!("{:?}", cert.verdict), outcome, to_value(&cert))
        }
        Task::Hermite { poly: p } => hermite(p),
        Task::Nuij { poly: p, nvars, e, s, sampler } => nuij(&poly(p, *nvars)?, &rats(e), &s.0, sampler),
        Task::Distract { ideal, nvars, k, assignment, seed } => distract(ideal, *nvars, *k, assignment.as_deref(), *seed),
        Task::Tighten { fan, nvars, k, mu_budget } => {
            let report = tighten_driver(&Fan::parse(fan, *nvars, *k)?, *mu_budget)?;
            let (verdict, outcome) = match report.outcome {
                DriverOutcome::Tight { .. } => ("TightFan", Outcome::Verified),
                DriverOutcome::NeedsSchemeStep { .. } => ("NeedsSchemeStep", Outcome::Inconclusive),
            };
            done(verdict, outcome, to_value(&report))
        }
        Task::Nstar { fan, ideal, nvars, k } => nstar(fan.as_deref(), ideal.as_deref(), *nvars, *k),
        Task::DeformCheck { nvars, generators, deformations, families, restriction, socle, fiber_sturm } => {
            deform_check(*nvars, generators, deformations, families, restriction.as_ref(), socle.as_ref(), &rats(fiber_sturm))
        }
        Task::FamilyScan { nvars, generators, checker, t } => scan_family(*nvars, generators, checker, &rats(t)),
        Task::Metadata { summary } => done("Metadata", Outcome::Verified, json!({ "summary": summary })),
        Task::Suite { tasks } => {
            let certs = tasks.iter().map(run).collect::<Result<Vec<_>>>()?;
            let outcome = certs.iter().map(|c| c.outcome).max().unwrap_or(Outcome::Verified);
            let verdicts: Vec<&str> = certs.iter().map(|c| c.verdict.as_str()).collect();
            done(verdicts.join(" / "), outcome, to_value(&certs))
        }
    }
}

fn check_curve(forms: &[String], degree: usize, center: &super::task::SubspaceSpec) -> Result<Done> {
    let forms = forms.iter().map(|f| binary(f, degree)).collect::<Result<Vec<_>>>()?;
    let param = RationalCurveParam::new(forms)?;
    let e = center.build(param.nvars())?;
    match curve_hyperbolicity(&param, &e) {
        Ok(cert) => {
            let outcome = match cert.verdict {
                CurveVerdict::StrictlyHyperbolic => Outcome::Verified,
                CurveVerdict::NotHyperbolicWitness => Outcome::Falsified,
                CurveVerdict::Inconclusive => Outcome::Inconclusive,
            };
            done(format!("{:?}", cert.verdict), outcome, to_value(&cert))
        }
        Err(Error::CenterMeetsCurve(w)) => {
            done("CenterMeetsCurve", Outcome::Falsified, json!({ "center": to_value(&e), "witness": w }))
        }
        Err(e) => Err(e),
    }
}

#[derive(Serialize)]
struct HermiteResult {
    poly: crate::kernel::UPoly,
    #[serde(with = "serde_rat_vec")]
    power_sums: Vec<Rat>,
    hermite: crate::kernel::SymMat,
    signature: crate::kernel::SignatureCert,
    status: crate::realcert::RealRootStatus,
    sturm_distinct_real_roots: usize,
}

fn hermite(p: &str) -> Result<Done> {
    let f = MPoly::parse(p, 1)?.to_upoly(0).ok_or_else(|| Error::Task("expected a polynomial in x0".into()))?;
    let h = hermite_matrix(&f)?;
    let signature = ldlt_signature(&h);
    let status = real_rooted_status(&f)?;
    let sturm = sturm_distinct_real_roots(&f)?;
    if signature.n_pos as i64 - signature.n_neg as i64 != sturm as i64 {
        return Err(Error::Consistency("Hermite signature and Sturm count disagree".into()));
    }
    let degree = f.degree().max(0) as usize;
    let result = HermiteResult {
        power_sums: newton_power_sums(&f, 2 * degree.max(1) - 1)?,
        poly: f,
        hermite: h,
        signature,
        sturm_distinct_real_roots: sturm,
        status,
    };
    done(format!("{:?}", result.status.tag), Outcome::Verified, to_value(&result))
}

#[derive(Serialize)]
struct SweepEntry {
    sweep: usize,
    poly: MPoly,
    verdict: ScanVerdict,
    not_all_real: usize,
    multiple_roots: usize,
}

fn nuij(f: &MPoly, e: &[Rat], s: &Rat, sampler: &crate::engine::Sampler) -> Result<Done> {
    let sweeps = nuij_sweeps(f, e, s)?;
    let mut entries = Vec::new();
    let mut final_report = None;
    for (i, g) in sweeps.iter().enumerate() {
        let report = hypersurface_scan(g, e, sampler)?;
        entries.push(SweepEntry {
            sweep: i,
            poly: g.clone(),
            verdict: report.verdict,
            not_all_real: report.failures.len(),
            multiple_roots: report.strict_failures.len(),
        });
        final_report = Some(report);
    }
    let last = final_report.expect("at least the input is scanned");
    let outcome = if entries.iter().any(|s| s.not_all_real > 0) {
        Outcome::Falsified
    } else if last.verdict == ScanVerdict::ConsistentAndStrictAtSamples {
        Outcome::Verified
    } else {
        Outcome::Inconclusive
    };
    done(
        format!("{:?}", last.verdict),
        outcome,
        json!({ "s": fmt_rat(s), "sweeps": to_value(&entries), "final_scan": to_value(&last) }),
    )
}

fn distract(ideal: &str, nvars: usize, k: usize, assignment: Option<&[SlotValues]>, seed: u64) -> Result<Done> {
    let i = MonomialIdeal::parse(ideal, nvars)?;
    let t = match assignment {
        Some(slots) => {
            DistractionAssignment::from_lists(&slots.iter().map(|s| (s.var, rats(&s.values))).collect::<Vec<_>>())?
        }
        None => DistractionAssignment::seeded(&i, seed),
    };
    let generators = t.distraction(&i)?;
    let (fan, step) = distraction_step(&i, &t, k)?;
    let result = json!({
        "ideal": i.to_string(),
        "balanced": i.is_balanced(),
        "assignment": to_value(&t),
        "distraction": to_value(&generators),
        "fan": to_value(&fan),
        "step": to_value(&step),
    });
    let outcome = if step.is_valid() { Outcome::Verified } else { Outcome::Inconclusive };
    done("Fan", outcome, result)
}

fn nstar(fan: Option<&str>, ideal: Option<&str>, nvars: usize, k: usize) -> Result<Done> {
    match (fan, ideal) {
        (Some(f), None) => {
            let fan = Fan::parse(f, nvars, k)?;
            let hp = fan.hilbert_polynomial()?;
            done(
                "Computed",
                Outcome::Verified,
                json!({ "fan": to_value(&fan), "hilbert_polynomial": to_value(&hp), "n_star": n_star(&fan)? }),
            )
        }
        (None, Some(s)) => {
            let i = MonomialIdeal::parse(s, nvars)?;
            let data = hilbert(&i);
            done(
                "Computed",
                Outcome::Verified,
                json!({ "ideal": i.to_string(), "hilbert": to_value(&data), "n_star": n_star_monomial(&i)? }),
            )
        }
        _ => Err(Error::Task("nstar needs exactly one of `fan` or `ideal`".into())),
    }
}

#[derive(Serialize)]
struct DeformCase {
    label: String,
    #[serde(with = "serde_rat_vec", skip_serializing_if = "Vec::is_empty")]
    section: Vec<Rat>,
    phi: DeformationHom,
    strictness: StrictnessCert,
    #[serde(skip_serializing_if = "Option::is_none")]
    socle: Option<SocleOutcome>,
}

#[derive(Serialize)]
struct FiberSturm {
    family: usize,
    #[serde(with = "serde_rat")]
    t: Rat,
    fiber: crate::kernel::UPoly,
    distinct_real_roots: usize,
    tag: RootTag,
}

fn deform_check(
    nvars: usize,
    generators: &[String],
    deformations: &[Vec<String>],
    families: &[Vec<Vec<String>>],
    restriction: Option<&super::task::RestrictionSpec>,
    socle: Option<&super::task::SocleSpec>,
    fiber_sturm: &[Rat],
) -> Result<Done> {
    let gens = polys(generators, nvars)?;
    let mut phis: Vec<(String, DeformationHom)> = Vec::new();
    for (i, d) in deformations.iter().enumerate() {
        if d.len() != gens.len() {
            return Err(Error::DimensionMismatch { expected: gens.len(), got: d.len() });
        }
        phis.push((format!("deformation {i}"), DeformationHom::new(polys(d, nvars)?)));
    }
    let mut fams: Vec<Vec<Vec<MPoly>>> = Vec::new();
    for (i, fam) in families.iter().enumerate() {
        let fam: Vec<Vec<MPoly>> = fam.iter().map(|g| polys(g, nvars)).collect::<Result<_>>()?;
        if fam.len() != gens.len() || fam.iter().zip(&gens).any(|(g, g0)| g.first() != Some(g0)) {
            return Err(Error::Task(format!("family {i} does not specialize to the generators at t = 0")));
        }
        phis.push((format!("family {i}"), DeformationHom::from_family(&fam, nvars)));
        fams.push(fam);
    }
    if phis.is_empty() {
        return Err(Error::Task("no deformation given".into()));
    }
    let mut cases = Vec::new();
    for (label, phi) in &phis {
        match restriction {
            Some(r) => {
                let e = r.center.build(nvars)?;
                for p in &r.through {
                    let p = rats(p);
                    let e_prime = e.join(&p)?;
                    let res = restrict_deformation(&gens, &phi.images, &e, &e_prime)?;
                    cases.push(DeformCase {
                        label: label.clone(),
                        section: p,
                        strictness: is_strict(&res.algebra, &res.phi)?,
                        phi: res.phi.clone(),
                        socle: None,
                    });
                }
            }
            None => {
                let algebra = quotient_algebra(&buchberger(&gens, MonomialOrder::GrLex)?)?;
                let socle = match socle {
                    Some(s) => {
                        let points: Vec<Vec<Rat>> = s.points.iter().map(|p| rats(p)).collect();
                        Some(socle_shortcut(&algebra, &points, phi, &poly(&s.f, nvars)?)?)
                    }
                    None => None,
                };
                cases.push(DeformCase {
                    label: label.clone(),
                    section: vec![],
                    strictness: is_strict(&algebra, phi)?,
                    phi: phi.clone(),
                    socle,
                });
            }
        }
    }
    let mut fibers = Vec::new();
    if !fiber_sturm.is_empty() {
        if nvars != 1 || gens.len() != 1 {
            return Err(Error::Task("fiber Sturm counts need one generator in one variable".into()));
        }
        for (i, fam) in fams.iter().enumerate() {
            for t in fiber_sturm {
                let fiber = specialize(&fam[0], t)?.to_upoly(0).expect("univariate");
                fibers.push(FiberSturm {
                    family: i,
                    t: t.clone(),
                    distinct_real_roots: sturm_distinct_real_roots(&fiber)?,
                    tag: real_rooted_status(&fiber)?.tag,
                    fiber,
                });
            }
        }
    }
    let all_strict = cases.iter().all(|c| c.strictness.verdict);
    let (verdict, outcome) = if all_strict { ("Strict", Outcome::Verified) } else { ("NotStrict", Outcome::Falsified) };
    done(
        verdict,
        outcome,
        json!({
            "qualifier": FIRST_ORDER_QUALIFIER,
            "all_strict": all_strict,
            "cases": to_value(&cases),
            "fibers": to_value(&fibers),
        }),
    )
}

fn scan_family(nvars: usize, generators: &[Vec<String>], checker: &CheckerSpec, ts: &[Rat]) -> Result<Done> {
    let gens: Vec<Vec<MPoly>> = generators.iter().map(|g| polys(g, nvars)).collect::<Result<_>>()?;
    let checker = match checker {
        CheckerSpec::Hypersurface { e, sampler } => FiberChecker::Hypersurface { e: rats(e), sampler: *sampler },
        CheckerSpec::Curve { param, degree, center } => FiberChecker::Curve {
            param: param
                .iter()
                .map(|coord| coord.iter().map(|f| binary(f, *degree)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?,
            center: center.build(param.len())?,
        },
        CheckerSpec::Variety { center, degree, sampler } => {
            FiberChecker::Variety { center: center.build(nvars)?, degree: *degree, sampler: *sampler }
        }
    };
    let entries = family_scan(&gens, &checker, ts)?;
    let failing: Vec<String> = entries.iter().filter(|e| e.report.has_failures()).map(|e| fmt_rat(&e.t)).collect();
    let (verdict, outcome) = if failing.is_empty() {
        ("NoFailuresAtSamples", Outcome::Verified)
    } else {
        ("FailuresFound", Outcome::Falsified)
    };
    done(verdict, outcome, json!({ "failing_parameters": failing, "fibers": to_value(&entries) }))
}

/// A short human-readable rendering of a certificate.
pub fn summary(cert: &Certificate) -> String {
    let mut out = String::new();
    if let Some(name) = &cert.task.name {
        out.push_str(&format!("{name}\n"));
    }
    out.push_str(&format!("task:    {}\n", cert.task.task.kind()));
    out.push_str(&format!("verdict: {} (exit {})\n", cert.verdict, cert.exit_code));
    if let Some(seed) = cert.seed {
        out.push_str(&format!("seed:    {seed}\n"));
    }
    if let Value::Array(items) = &cert.result {
        for item in items {
            let name = item.pointer("/task/name").and_then(Value::as_str).unwrap_or("-");
            let verdict = item.get("verdict").and_then(Value::as_str).unwrap_or("-");
            let code = item.get("exit_code").and_then(Value::as_i64).unwrap_or(-1);
            out.push_str(&format!("  {name}: {verdict} (exit {code})\n"));
        }
    }
    if let Value::Object(map) = &cert.result {
        for (k, v) in map {
            let text = v.to_string();
            let shown = if text.chars().count() > 96 {
                format!("{}...", text.chars().take(93).collect::<String>())
            } else {
                text
            };
            out.push_str(&format!("  {k}: {shown}\n"));
        }
    }
    out
}
