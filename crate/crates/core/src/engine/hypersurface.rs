//! Line-by-line hyperbolicity checks for hypersurfaces.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::sample::Sampler;
use crate::kernel::rat::serde_rat_vec;
use crate::kernel::{MPoly, Rat, UPoly};
use crate::realcert::{real_rooted_status, RealRootStatus, RootTag};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineVerdict {
    #[serde(with = "serde_rat_vec")]
    pub base_point: Vec<Rat>,
    pub status: RealRootStatus,
    /// `t ↦ f(x + t·e)`.
    pub witness: UPoly,
}

/// Classifies the roots of `f(x + t·e)`.
pub fn line_hyperbolicity(f: &MPoly, e: &[Rat], x: &[Rat]) -> Result<LineVerdict> {
    if f.eval(e).is_zero() {
        return Err(Error::VanishesAtDirection);
    }
    if x.len() != e.len() {
        return Err(Error::DimensionMismatch { expected: e.len(), got: x.len() });
    }
    if proportional(x, e) {
        return Err(Error::DegenerateLine);
    }
    let witness = f.restrict_to_line(x, e)?;
    let status = real_rooted_status(&witness)?;
    Ok(LineVerdict { base_point: x.to_vec(), status, witness })
}

fn proportional(x: &[Rat], e: &[Rat]) -> bool {
    let Some(i) = e.iter().position(|v| !v.is_zero()) else { return true };
    let c = &x[i] / &e[i];
    x.iter().zip(e).all(|(xi, ei)| *xi == &c * ei)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScanVerdict {
    FalsifiedHyperbolic,
    ConsistentAtSamples,
    ConsistentAndStrictAtSamples,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub sample_count: usize,
    pub verdict: ScanVerdict,
    pub failures: Vec<LineVerdict>,
    pub strict_failures: Vec<LineVerdict>,
    pub sampler: Sampler,
}

/// Checks `f` along lines `x + t·e` for sampled base points `x`.
pub fn hypersurface_scan(f: &MPoly, e: &[Rat], sampler: &Sampler) -> Result<ScanReport> {
    if e.len() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), got: e.len() });
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if f.eval(e).is_zero() {
        return Err(Error::VanishesAtDirection);
    }
    let points = sampler.chart_points(e);
    let verdicts: Vec<LineVerdict> = points
        .par_iter()
        .map(|x| line_hyperbolicity(f, e, x))
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut strict_failures = Vec::new();
    for v in verdicts {
        match v.status.tag {
            RootTag::NotAllReal => failures.push(v),
            RootTag::AllRealWithMultiplicity => strict_failures.push(v),
            RootTag::AllRealSimple => {}
        }
    }
    failures.sort_by(|a, b| a.base_point.cmp(&b.base_point));
    strict_failures.sort_by(|a, b| a.base_point.cmp(&b.base_point));
    let verdict = if !failures.is_empty() {
        ScanVerdict::FalsifiedHyperbolic
    } else if !strict_failures.is_empty() {
        ScanVerdict::ConsistentAtSamples
    } else {
        ScanVerdict::ConsistentAndStrictAtSamples
    };
    Ok(ScanReport { sample_count: points.len(), verdict, failures, strict_failures, sampler: *sampler })
}
