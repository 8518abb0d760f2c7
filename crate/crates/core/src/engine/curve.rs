//! Hyperbolicity of rational curves with respect to a codimension-two center.

use num_traits::{One, Zero};
use serde::Serialize;

use super::subspace::LinearSubspace;
use crate::kernel::rat::{int, rat, serde_rat};
use crate::kernel::{BinaryForm, MPoly, Rat, UPoly};
use crate::realcert::{interlace_certificate, real_rooted_status, InterlaceCert, InterlaceVerdict, RootTag};
use crate::{Error, Result};

/// A morphism `P^1 -> P^n` given by `n + 1` binary forms of one degree
/// without a common zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalCurveParam {
    forms: Vec<BinaryForm>,
}

impl RationalCurveParam {
    pub fn new(forms: Vec<BinaryForm>) -> Result<Self> {
        let d = forms.first().ok_or(Error::InvalidSubspace("empty parametrization".into()))?.degree();
        if let Some(f) = forms.iter().find(|f| f.degree() != d) {
            return Err(Error::DegreeMismatch(d, f.degree()));
        }
        let g = forms.iter().fold(UPoly::zero(), |g, f| g.gcd(&f.dehomogenize()));
        let at_inf = forms.iter().all(|f| f.root_at_infinity() > 0);
        if g.is_zero() || g.degree() > 0 || at_inf {
            return Err(Error::CommonFactor);
        }
        Ok(RationalCurveParam { forms })
    }

    /// Parses one polynomial in `x0 = s`, `x1 = t` per coordinate.
    pub fn parse(forms: &[&str], degree: usize) -> Result<Self> {
        Self::new(forms.iter().map(|f| BinaryForm::parse(f, degree)).collect::<Result<_>>()?)
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    pub fn nvars(&self) -> usize {
        self.forms.len()
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn point(&self, s: &Rat, t: &Rat) -> Vec<Rat> {
        self.forms.iter().map(|f| f.eval(s, t)).collect()
    }

    /// Composes the linear forms `l` (coefficient vectors) with the curve.
    pub fn compose_linear(&self, l: &[Rat]) -> BinaryForm {
        BinaryForm::linear_combination(l, &self.forms).expect("common degree")
    }

    /// Composes an arbitrary polynomial with the curve, as a form of degree `deg g · d`.
    pub fn compose(&self, g: &MPoly) -> Result<MPoly> {
        let subs: Vec<MPoly> = self.forms.iter().map(|f| f.to_mpoly()).collect();
        g.substitute(&subs)
    }

    /// Image under the linear map `y = C x`.
    pub fn transform(&self, c: &[Vec<Rat>]) -> Result<Self> {
        Self::new(c.iter().map(|row| self.compose_linear(row)).collect())
    }
}

/// The two canonical defining forms of `e` composed with the curve.
pub fn projection_forms(c: &RationalCurveParam, e: &LinearSubspace) -> Result<(BinaryForm, BinaryForm)> {
    if e.nvars() != c.nvars() {
        return Err(Error::DimensionMismatch { expected: c.nvars(), got: e.nvars() });
    }
    let forms = e.defining_forms();
    if forms.len() != 2 {
        return Err(Error::InvalidSubspace(format!(
            "center must have codimension two, found {} defining forms",
            forms.len()
        )));
    }
    let p = c.compose_linear(&forms[0]);
    let q = c.compose_linear(&forms[1]);
    if p.is_zero() || q.is_zero() {
        return Err(Error::CenterMeetsCurve("a defining form of the center vanishes on the curve".into()));
    }
    let g = p.dehomogenize().gcd(&q.dehomogenize());
    if g.degree() > 0 {
        return Err(Error::CenterMeetsCurve(format!("common factor {g} of the projection forms")));
    }
    if p.root_at_infinity() > 0 && q.root_at_infinity() > 0 {
        return Err(Error::CenterMeetsCurve("common factor s of the projection forms".into()));
    }
    Ok((p, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveVerdict {
    StrictlyHyperbolic,
    Inconclusive,
    NotHyperbolicWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilWitness {
    #[serde(with = "serde_rat")]
    pub lambda: Rat,
    #[serde(with = "serde_rat")]
    pub mu: Rat,
    /// `lambda·p - mu·q`, which has non-real roots.
    pub member: BinaryForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveHypCert {
    pub center: LinearSubspace,
    pub forms: (BinaryForm, BinaryForm),
    pub interlace: InterlaceCert,
    pub verdict: CurveVerdict,
    pub witness: Option<PencilWitness>,
}

/// Rational directions `(lambda : mu)` tried when looking for a non-real fiber.
fn pencil_grid() -> Vec<(Rat, Rat)> {
    let mut out = vec![(Rat::one(), Rat::zero()), (Rat::zero(), Rat::one())];
    for num in -12i64..=12 {
        for den in [1i64, 2, 3, 5, 7] {
            if den == 1 || num % den != 0 {
                out.push((Rat::one(), rat(num, den)));
            }
        }
    }
    out.push((int(1), rat(1, 100)));
    out.push((int(1), rat(-1, 100)));
    out
}

pub fn curve_hyperbolicity(c: &RationalCurveParam, e: &LinearSubspace) -> Result<CurveHypCert> {
    let (p, q) = projection_forms(c, e)?;
    let interlace = interlace_certificate(&p, &q)?;
    let mut witness = None;
    let verdict = if interlace.verdict == InterlaceVerdict::StrictlyInterlacing {
        CurveVerdict::StrictlyHyperbolic
    } else {
        for (lambda, mu) in pencil_grid() {
            let member = p.combine(&lambda, &q, &-mu.clone())?;
            if member.is_zero() {
                continue;
            }
            if real_rooted_status(&member.dehomogenize())?.tag == RootTag::NotAllReal {
                witness = Some(PencilWitness { lambda, mu, member });
                break;
            }
        }
        if witness.is_some() {
            CurveVerdict::NotHyperbolicWitness
        } else {
            CurveVerdict::Inconclusive
        }
    };
    Ok(CurveHypCert { center: e.clone(), forms: (p, q), interlace, verdict, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::vec_of;

    fn twisted_cubic() -> RationalCurveParam {
        RationalCurveParam::parse(&["x1^3", "x0*x1^2", "x0^2*x1", "x0^3"], 3).unwrap()
    }

    fn center() -> LinearSubspace {
        LinearSubspace::from_points(4, &[vec_of(&[4, 0, 1, 0]), vec_of(&[0, 1, 0, 1])]).unwrap()
    }

    #[test]
    fn twisted_cubic_projection() {
        let (p, q) = projection_forms(&twisted_cubic(), &center()).unwrap();
        assert_eq!(p, BinaryForm::parse("x1^3 - 4*x0^2*x1", 3).unwrap());
        assert_eq!(q, BinaryForm::parse("x0*x1^2 - x0^3", 3).unwrap());
        let cert = curve_hyperbolicity(&twisted_cubic(), &center()).unwrap();
        assert_eq!(cert.verdict, CurveVerdict::StrictlyHyperbolic);
    }

    #[test]
    fn center_through_curve_point() {
        let c = twisted_cubic();
        let on = c.point(&int(1), &int(1));
        let e = LinearSubspace::from_points(4, &[on, vec_of(&[0, 1, 0, 5])]).unwrap();
        assert!(matches!(projection_forms(&c, &e), Err(Error::CenterMeetsCurve(_))));
    }

    #[test]
    fn non_real_fiber_is_found() {
        // projection forms t^3 + s^2 t and s^3: the fiber over (1:0) has non-real points
        let e = LinearSubspace::from_forms(4, &[vec_of(&[1, 0, 1, 0]), vec_of(&[0, 0, 0, 1])]).unwrap();
        let cert = curve_hyperbolicity(&twisted_cubic(), &e).unwrap();
        assert_eq!(cert.verdict, CurveVerdict::NotHyperbolicWitness);
        assert!(cert.witness.is_some());
    }

    #[test]
    fn rejects_common_factor() {
        assert_eq!(
            RationalCurveParam::parse(&["x0*x1", "x0^2"], 2),
            Err(Error::CommonFactor)
        );
    }
}
