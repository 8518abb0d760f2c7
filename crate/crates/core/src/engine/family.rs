//! Scans of one-parameter families `X_t` at sampled rational parameters.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::curve::{curve_hyperbolicity, CurveHypCert, RationalCurveParam};
use super::hypersurface::{hypersurface_scan, ScanReport, ScanVerdict};
use super::sample::Sampler;
use super::subspace::LinearSubspace;
use crate::defcheck::{buchberger, quotient_algebra, AffineChart, MonomialOrder};
use crate::kernel::linalg;
use crate::kernel::rat::{approx, int, serde_rat, serde_rat_vec};
use crate::kernel::{ldlt_signature, BinaryForm, MPoly, Rat};
use crate::{Error, Result};

/// A polynomial depending on a parameter `t`: entry `k` multiplies `t^k`.
pub type ParamPoly = Vec<MPoly>;

pub fn specialize(p: &[MPoly], t: &Rat) -> Result<MPoly> {
    let first = p.first().ok_or_else(|| Error::Task("empty parametric polynomial".into()))?;
    let mut acc = MPoly::zero(first.nvars());
    let mut tk = Rat::one();
    for c in p {
        if c.nvars() != first.nvars() {
            return Err(Error::DimensionMismatch { expected: first.nvars(), got: c.nvars() });
        }
        acc = &acc + &c.scale(&tk);
        tk *= t;
    }
    Ok(acc)
}

fn specialize_form(p: &[BinaryForm], t: &Rat) -> Result<BinaryForm> {
    let weights: Vec<Rat> = (0..p.len()).map(|k| num_traits::pow(t.clone(), k)).collect();
    BinaryForm::linear_combination(&weights, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberChecker {
    /// One generator; lines through `e` are sampled.
    Hypersurface { e: Vec<Rat>, sampler: Sampler },
    /// A parametrized curve family, coordinate `i` given by the forms `param[i][k]` multiplying `t^k`.
    Curve { param: Vec<Vec<BinaryForm>>, center: LinearSubspace },
    /// Zero-dimensional sections by sampled subspaces `E' = E + p`.
    Variety { center: LinearSubspace, degree: usize, sampler: Sampler },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DirectionIssue {
    NotAllReal,
    NotReduced,
    MeetsCenter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionFailure {
    /// The extra spanning point of `E'`.
    #[serde(with = "serde_rat_vec")]
    pub point: Vec<Rat>,
    pub issue: DirectionIssue,
    pub section_length: usize,
    pub inertia: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarietyScan {
    pub directions: usize,
    pub verdict: ScanVerdict,
    pub failures: Vec<DirectionFailure>,
    pub strict_failures: Vec<DirectionFailure>,
    /// Directions whose section fell outside the algebra engine's scope.
    pub skipped: usize,
    pub sampler: Sampler,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "checker", rename_all = "snake_case")]
pub enum FiberReport {
    Hypersurface(ScanReport),
    Curve(CurveHypCert),
    Variety(VarietyScan),
}

impl FiberReport {
    pub fn has_failures(&self) -> bool {
        match self {
            FiberReport::Hypersurface(r) => r.verdict == ScanVerdict::FalsifiedHyperbolic,
            FiberReport::Curve(c) => c.verdict == super::curve::CurveVerdict::NotHyperbolicWitness,
            FiberReport::Variety(v) => v.verdict == ScanVerdict::FalsifiedHyperbolic,
        }
    }
}

/// Sampled singularity scan. Exact common zeros of the generators where the
/// Jacobian drops rank are genuine singular points; near misses are only flagged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityScan {
    pub points_checked: usize,
    #[serde(with = "crate::kernel::rat::serde_rat_mat")]
    pub singular_points: Vec<Vec<Rat>>,
    #[serde(with = "crate::kernel::rat::serde_rat_mat")]
    pub unresolved: Vec<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberEntry {
    #[serde(with = "serde_rat")]
    pub t: Rat,
    pub report: FiberReport,
    pub singularity_scan: SingularityScan,
}

const SINGULAR_SCAN_POINTS: usize = 200;
const NEAR_ZERO: f64 = 1e-3;

pub fn singularity_scan(gens: &[MPoly]) -> SingularityScan {
    let n = gens.first().map_or(0, |g| g.nvars());
    let jac: Vec<Vec<MPoly>> = gens.iter().map(|g| (0..n).map(|i| g.partial(i)).collect()).collect();
    let c = gens.len().min(n);
    let pts: Vec<Vec<i64>> = Sampler::grid(SINGULAR_SCAN_POINTS)
        .integer_points(n)
        .filter(|p| p.iter().any(|&v| v != 0))
        .take(SINGULAR_SCAN_POINTS)
        .collect();
    let results: Vec<(Vec<Rat>, bool, bool)> = pts
        .par_iter()
        .map(|raw| {
            let m = raw.iter().map(|v| v.abs()).max().unwrap_or(1).max(1);
            let x: Vec<Rat> = raw.iter().map(|&v| Rat::new(v.into(), m.into())).collect();
            let vals: Vec<Rat> = gens.iter().map(|g| g.eval(&x)).collect();
            let j: Vec<Vec<Rat>> = jac.iter().map(|row| row.iter().map(|d| d.eval(&x)).collect()).collect();
            let jjt = linalg::mat_mul(&j, &linalg::transpose(&j));
            let gram = det(&jjt);
            let exact = vals.iter().all(|v| v.is_zero()) && linalg::rank(&j) < c;
            let near = vals.iter().all(|v| approx(v).abs() < NEAR_ZERO) && approx(&gram).abs() < NEAR_ZERO;
            (x, exact, near && !exact)
        })
        .collect();
    let mut singular_points = Vec::new();
    let mut unresolved = Vec::new();
    for (x, exact, near) in results {
        if exact {
            singular_points.push(x);
        } else if near {
            unresolved.push(x);
        }
    }
    SingularityScan { points_checked: pts.len(), singular_points, unresolved }
}

fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Rat::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    d
}

enum Section {
    Skipped,
    Clean,
    Issue(DirectionFailure),
}

/// Checks `X ∩ E'` for `E' = E + p` with `p` sampled.
pub fn variety_scan(gens: &[MPoly], center: &LinearSubspace, degree: usize, sampler: &Sampler) -> Result<VarietyScan> {
    let n = center.nvars();
    let points: Vec<Vec<Rat>> = sampler
        .integer_points(n)
        .map(|raw| raw.iter().map(|&v| int(v)).collect::<Vec<Rat>>())
        .filter(|p| !center.contains_point(p))
        .take(sampler.count)
        .collect();
    let outcomes: Vec<Section> = points
        .par_iter()
        .map(|p| -> Result<Section> {
            let ep = center.join(p)?;
            let chart = AffineChart::new(center, &ep)?;
            let restricted: Vec<MPoly> = gens.iter().map(|g| chart.pull_back(g)).collect::<Result<_>>()?;
            let alg = match buchberger(&restricted, MonomialOrder::GrLex).and_then(|gb| quotient_algebra(&gb)) {
                Ok(a) => a,
                Err(Error::ScopeExceeded(_)) | Err(Error::NotZeroDimensional) => return Ok(Section::Skipped),
                Err(e) => return Err(e),
            };
            let sig = ldlt_signature(&alg.trace_form());
            let issue = if alg.dim() != degree {
                DirectionIssue::MeetsCenter
            } else if sig.n_neg > 0 {
                DirectionIssue::NotAllReal
            } else if sig.n_zero > 0 {
                DirectionIssue::NotReduced
            } else {
                return Ok(Section::Clean);
            };
            Ok(Section::Issue(DirectionFailure {
                point: p.clone(),
                issue,
                section_length: alg.dim(),
                inertia: (sig.n_pos, sig.n_neg, sig.n_zero),
            }))
        })
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut strict_failures = Vec::new();
    let mut skipped = 0;
    for o in outcomes {
        match o {
            Section::Skipped => skipped += 1,
            Section::Clean => {}
            Section::Issue(f) if f.issue == DirectionIssue::NotReduced => strict_failures.push(f),
            Section::Issue(f) => failures.push(f),
        }
    }
    failures.sort_by(|a, b| a.point.cmp(&b.point));
    strict_failures.sort_by(|a, b| a.point.cmp(&b.point));
    let verdict = if !failures.is_empty() {
        ScanVerdict::FalsifiedHyperbolic
    } else if !strict_failures.is_empty() {
        ScanVerdict::ConsistentAtSamples
    } else {
        ScanVerdict::ConsistentAndStrictAtSamples
    };
    Ok(VarietyScan { directions: points.len() - skipped, verdict, failures, strict_failures, skipped, sampler: *sampler })
}

/// Specializes the family at each `t` and runs the configured checker plus a
/// sampled singularity scan on the fiber.
pub fn family_scan(gens: &[ParamPoly], checker: &FiberChecker, t_samples: &[Rat]) -> Result<Vec<FiberEntry>> {
    let mut out = Vec::with_capacity(t_samples.len());
    for t in t_samples {
        let fiber: Vec<MPoly> = gens.iter().map(|g| specialize(g, t)).collect::<Result<_>>()?;
        if fiber.is_empty() {
            return Err(Error::Task("family without generators".into()));
        }
        let report = match checker {
            FiberChecker::Hypersurface { e, sampler } => {
                if fiber.len() != 1 {
                    return Err(Error::Task("the hypersurface checker takes exactly one generator".into()));
                }
                FiberReport::Hypersurface(hypersurface_scan(&fiber[0], e, sampler)?)
            }
            FiberChecker::Curve { param, center } => {
                let forms: Vec<BinaryForm> = param.iter().map(|c| specialize_form(c, t)).collect::<Result<_>>()?;
                let curve = RationalCurveParam::new(forms)?;
                for g in &fiber {
                    if !curve.compose(g)?.is_zero() {
                        return Err(Error::Consistency(format!("generator {g} does not vanish on the curve at t = {t}")));
                    }
                }
                FiberReport::Curve(curve_hyperbolicity(&curve, center)?)
            }
            FiberChecker::Variety { center, degree, sampler } => {
                FiberReport::Variety(variety_scan(&fiber, center, *degree, sampler)?)
            }
        };
        let singularity_scan = singularity_scan(&fiber);
        out.push(FiberEntry { t: t.clone(), report, singularity_scan });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::curve::CurveVerdict;
    use crate::kernel::rat::{rat, vec_of};

    #[test]
    fn empty_parameter_list() {
        let g = vec![vec![MPoly::parse("x0^2 - x1^2", 2).unwrap()]];
        let c = FiberChecker::Hypersurface { e: vec_of(&[1, 0]), sampler: Sampler::random(10, 0) };
        assert!(family_scan(&g, &c, &[]).unwrap().is_empty());
    }

    #[test]
    fn hypersurface_family() {
        // x0^2 - x1^2 - t x2^2
        let g = vec![vec![MPoly::parse("x0^2 - x1^2", 3).unwrap(), MPoly::parse("-x2^2", 3).unwrap()]];
        let c = FiberChecker::Hypersurface { e: vec_of(&[1, 0, 0]), sampler: Sampler::random(40, 3) };
        let r = family_scan(&g, &c, &[rat(1, 2), int(-1)]).unwrap();
        assert!(!r[0].report.has_failures());
        assert!(r[1].report.has_failures());
    }

    #[test]
    fn cone_apex_is_an_exact_singular_point() {
        let s = singularity_scan(&[MPoly::parse("x0^2 - x1^2 - x2^2", 3).unwrap()]);
        assert!(s.singular_points.is_empty());
        let s = singularity_scan(&[MPoly::parse("x0*x1", 2).unwrap(), MPoly::parse("x0^2", 2).unwrap()]);
        assert!(!s.singular_points.is_empty());
    }

    #[test]
    fn curve_family_checks_generators() {
        let tc: Vec<Vec<BinaryForm>> = ["x1^3", "x0*x1^2", "x0^2*x1", "x0^3"]
            .iter()
            .map(|s| vec![BinaryForm::parse(s, 3).unwrap()])
            .collect();
        let center = LinearSubspace::from_points(4, &[vec_of(&[4, 0, 1, 0]), vec_of(&[0, 1, 0, 1])]).unwrap();
        let good = vec![vec![MPoly::parse("x0*x2 - x1^2", 4).unwrap()]];
        let checker = FiberChecker::Curve { param: tc, center };
        let r = family_scan(&good, &checker, &[int(1)]).unwrap();
        assert!(matches!(&r[0].report, FiberReport::Curve(c) if c.verdict == CurveVerdict::StrictlyHyperbolic));
        let bad = vec![vec![MPoly::parse("x0*x3 - x1^2", 4).unwrap()]];
        assert!(matches!(family_scan(&bad, &checker, &[int(1)]), Err(Error::Consistency(_))));
    }

    #[test]
    fn reciprocal_surface_family() {
        let n = 5;
        let q = MPoly::parse("(x1 + x3)^2 + (x2 + x4)^2", n).unwrap();
        let gens = vec![
            vec![MPoly::parse("x0*x1 - x0*x3 - x1*x3", n).unwrap(), -&q],
            vec![MPoly::parse("x0*x2 - x0*x4 - x2*x4", n).unwrap(), -&q],
        ];
        let center = LinearSubspace::from_points(n, &[vec_of(&[1, 1, 0, -1, 0]), vec_of(&[1, 0, 1, 0, -1])]).unwrap();
        let checker = FiberChecker::Variety { center, degree: 4, sampler: Sampler::random(30, 9) };
        let r = family_scan(&gens, &checker, &[rat(1, 20), int(-1)]).unwrap();
        assert!(!r[0].report.has_failures());
        assert!(r[1].report.has_failures());
    }
}
