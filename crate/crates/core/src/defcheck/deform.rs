//! First-order deformations over the dual numbers and the form `b_φ`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::algebra::{identity_s, mul_s, trace_s, QuotientAlgebra};
use crate::kernel::linalg::Mat;
use crate::kernel::rat::{serde_rat, serde_rat_mat};
use crate::kernel::{ldlt_signature, DualRat, MPoly, Rat, SignatureCert, SymMat};
use crate::{Error, Result};

/// Statement attached to every certificate derived from first-order data.
pub const FIRST_ORDER_QUALIFIER: &str =
    "first-order only: a strict verdict constrains the deformation over the dual numbers and does not by itself decide the fibers of a family";

pub type DualMat = Vec<Vec<DualRat>>;

/// `φ ∈ Hom(I, B/I)` given by representatives of the images of the ideal generators.
/// The deformed ideal is generated by `g + ε·φ(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationHom {
    pub images: Vec<MPoly>,
}

impl DeformationHom {
    pub fn new(images: Vec<MPoly>) -> Self {
        DeformationHom { images }
    }

    pub fn zero(nvars: usize, ngens: usize) -> Self {
        DeformationHom { images: vec![MPoly::zero(nvars); ngens] }
    }

    /// For a family `g_j(t) = Σ_k t^k g_{j,k}` the first-order direction is `φ(g_j) = g_{j,1}`.
    pub fn from_family(family: &[Vec<MPoly>], nvars: usize) -> Self {
        DeformationHom {
            images: family.iter().map(|g| g.get(1).cloned().unwrap_or_else(|| MPoly::zero(nvars))).collect(),
        }
    }

    /// Coordinates of each image in the quotient.
    pub fn coordinates(&self, a: &QuotientAlgebra) -> Vec<Vec<Rat>> {
        self.images.iter().map(|p| a.coords(p)).collect()
    }
}

/// `A' = B'/I'` as multiplication matrices over the dual numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedAlgebra {
    pub base: QuotientAlgebra,
    pub phi: DeformationHom,
    /// `φ(G_k)` for the Gröbner basis elements, reduced.
    pub phi_on_basis: Vec<MPoly>,
    pub mult: Vec<DualMat>,
}

fn show_vec(v: &[MPoly]) -> String {
    format!("({})", v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

fn to_dual(re: &Mat, eps: &Mat) -> DualMat {
    re.iter()
        .zip(eps)
        .map(|(r, e)| r.iter().zip(e).map(|(a, b)| DualRat::new(a.clone(), b.clone())).collect())
        .collect()
}

/// Builds `A'` after checking that `φ` is well defined on `I`.
pub fn apply_deformation(a: &QuotientAlgebra, phi: &DeformationHom) -> Result<DeformedAlgebra> {
    let gb = a.gb();
    let n = a.nvars();
    if phi.images.len() != gb.generators().len() {
        return Err(Error::DimensionMismatch { expected: gb.generators().len(), got: phi.images.len() });
    }
    if let Some(p) = phi.images.iter().find(|p| p.nvars() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: p.nvars() });
    }
    let phi_on_basis: Vec<MPoly> = gb
        .cofactors()
        .iter()
        .map(|c| {
            let s = c.iter().zip(&phi.images).fold(MPoly::zero(n), |acc, (cj, y)| &acc + &(cj * y));
            gb.normal_form(&s)
        })
        .collect();
    let apply = |v: &[MPoly]| -> MPoly {
        let s = v.iter().zip(&phi_on_basis).fold(MPoly::zero(n), |acc, (h, y)| &acc + &(h * y));
        gb.normal_form(&s)
    };
    for s in gb.syzygies() {
        let img = apply(s);
        if !img.is_zero() {
            return Err(Error::IllDefinedDeformation { syzygy: show_vec(s), image: img.to_string() });
        }
    }
    for (j, d) in gb.expansions().iter().enumerate() {
        let diff = gb.normal_form(&(&phi.images[j] - &apply(d)));
        if !diff.is_zero() {
            return Err(Error::IllDefinedDeformation {
                syzygy: format!("generator {j} = {}", show_vec(d)),
                image: diff.to_string(),
            });
        }
    }
    let mut mult = Vec::with_capacity(n);
    for i in 0..n {
        let xi = MPoly::var(n, i);
        let cols: Vec<Vec<Rat>> = (0..a.dim())
            .map(|c| {
                let (h, _) = gb.divide(&(&xi * &a.basis_poly(c)));
                a.coords(&apply(&h)).into_iter().map(|v| -v).collect()
            })
            .collect();
        let eps = crate::kernel::linalg::transpose(&cols);
        let eps = if a.dim() == 0 { vec![] } else { eps };
        mult.push(to_dual(&a.mult()[i], &eps));
    }
    for i in 0..n {
        for j in 0..i {
            if mul_s(&mult[i], &mult[j]) != mul_s(&mult[j], &mult[i]) {
                return Err(Error::Consistency("deformed multiplication matrices do not commute".into()));
            }
        }
    }
    let def = DeformedAlgebra { base: a.clone(), phi: phi.clone(), phi_on_basis, mult };
    for j in 0..a.dim() {
        let l = def.basis_matrix(j);
        if trace_s(&l).re != a.trace_of(&a.basis_poly(j)) {
            return Err(Error::Consistency("trace does not commute with the projection".into()));
        }
    }
    Ok(def)
}

impl DeformedAlgebra {
    /// Multiplication by the lift of the basis monomial `j`.
    pub fn basis_matrix(&self, j: usize) -> DualMat {
        let mut acc = identity_s::<DualRat>(self.base.dim());
        for (i, &e) in self.base.basis()[j].0.iter().enumerate() {
            for _ in 0..e {
                acc = mul_s(&acc, &self.mult[i]);
            }
        }
        acc
    }

    /// Multiplication by the lift `Σ_j (v_j + ε w_j) b_j`.
    pub fn lift_matrix(&self, v: &[Rat], w: &[Rat]) -> DualMat {
        let d = self.base.dim();
        let mut acc = vec![vec![DualRat::zero(); d]; d];
        for j in 0..d {
            let c = DualRat::new(v[j].clone(), w[j].clone());
            if c.is_zero() {
                continue;
            }
            let l = self.basis_matrix(j);
            for r in 0..d {
                for s in 0..d {
                    acc[r][s] = &acc[r][s] + &(&c * &l[r][s]);
                }
            }
        }
        acc
    }

    pub fn trace_of_product(&self, f: (&[Rat], &[Rat]), g: (&[Rat], &[Rat])) -> DualRat {
        trace_s(&mul_s(&self.lift_matrix(f.0, f.1), &self.lift_matrix(g.0, g.1)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationForm {
    #[serde(with = "serde_rat_mat")]
    pub nil_basis: Vec<Vec<Rat>>,
    pub matrix: SymMat,
}

/// `b_φ` on the nilradical using the lifts `f + ε·shift_f`; `shifts` may be empty.
pub fn deformation_form_with_lifts(def: &DeformedAlgebra, nil: &[Vec<Rat>], shifts: &[Vec<Rat>]) -> Result<SymMat> {
    let d = def.base.dim();
    let zero = vec![Rat::zero(); d];
    let shift = |k: usize| shifts.get(k).unwrap_or(&zero).as_slice();
    let mut rows = vec![vec![Rat::zero(); nil.len()]; nil.len()];
    for a in 0..nil.len() {
        for b in a..nil.len() {
            let t = def.trace_of_product((&nil[a], shift(a)), (&nil[b], shift(b)));
            if !t.re.is_zero() {
                return Err(Error::Consistency("trace of a product of nilpotents has a nonzero real part".into()));
            }
            rows[a][b] = t.eps.clone();
            rows[b][a] = t.eps;
        }
    }
    SymMat::from_rows(&rows)
}

pub fn deformation_form(a: &QuotientAlgebra, phi: &DeformationHom) -> Result<DeformationForm> {
    let def = apply_deformation(a, phi)?;
    let nil_basis = a.nilradical_basis()?;
    let matrix = deformation_form_with_lifts(&def, &nil_basis, &[])?;
    Ok(DeformationForm { nil_basis, matrix })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessCert {
    #[serde(with = "serde_rat_mat")]
    pub nil_basis: Vec<Vec<Rat>>,
    pub b_phi: SymMat,
    pub signature: SignatureCert,
    pub verdict: bool,
    pub qualifier: &'static str,
}

/// `φ` is a strict hyperbolic deformation iff `b_φ` is positive definite
/// (vacuously so on a reduced algebra).
pub fn is_strict(a: &QuotientAlgebra, phi: &DeformationHom) -> Result<StrictnessCert> {
    let f = deformation_form(a, phi)?;
    let signature = ldlt_signature(&f.matrix);
    Ok(StrictnessCert {
        nil_basis: f.nil_basis,
        verdict: signature.is_pd(),
        b_phi: f.matrix,
        signature,
        qualifier: FIRST_ORDER_QUALIFIER,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SocleVerdict {
    AppliesAndStrict,
    AppliesNoConclusion,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleOutcome {
    pub verdict: SocleVerdict,
    pub local_dimensions: Vec<usize>,
    /// `φ(f²)` evaluated at the double point, when the hypotheses hold.
    #[serde(serialize_with = "ser_opt_rat")]
    pub value: Option<Rat>,
    pub reason: String,
}

fn ser_opt_rat<S: serde::Serializer>(v: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => serde_rat::serialize(r, s),
        None => s.serialize_none(),
    }
}

/// The single-double-point criterion: with `Spec A` consisting of the given
/// rational points, one of local length two and the rest reduced, and
/// `f ∈ √I \ I`, a negative value of `φ(f²)` at the double point forces strictness.
pub fn socle_shortcut(a: &QuotientAlgebra, points: &[Vec<Rat>], phi: &DeformationHom, f: &MPoly) -> Result<SocleOutcome> {
    let gb = a.gb();
    if gb.contains(f) {
        return Err(Error::InIdeal);
    }
    let d = a.dim();
    let lf = a.mult_matrix_of(f);
    if !crate::kernel::linalg::is_zero(&crate::kernel::linalg::mat_pow(&lf, d)) {
        return Err(Error::NotInRadical);
    }
    let local: Vec<usize> = points.iter().map(|p| a.local_dimension(p)).collect::<Result<_>>()?;
    if local.iter().sum::<usize>() != d || local.contains(&0) {
        return Err(Error::BadDecomposition(format!(
            "local dimensions {local:?} do not add up to {d} or include a non-point"
        )));
    }
    let not_applicable = |reason: &str| SocleOutcome {
        verdict: SocleVerdict::NotApplicable,
        local_dimensions: local.clone(),
        value: None,
        reason: reason.to_string(),
    };
    let doubles: Vec<usize> = (0..local.len()).filter(|&i| local[i] == 2).collect();
    if doubles.len() != 1 || local.iter().any(|&m| m > 2) {
        return Ok(not_applicable("needs exactly one point of local length two and all others reduced"));
    }
    let f2 = f * f;
    if !gb.contains(&f2) {
        return Ok(not_applicable("f^2 is not in the ideal"));
    }
    let def = apply_deformation(a, phi)?;
    let (h, _) = gb.divide(&f2);
    let n = a.nvars();
    let image = h.iter().zip(&def.phi_on_basis).fold(MPoly::zero(n), |acc, (hk, y)| &acc + &(hk * y));
    let value = image.eval(&points[doubles[0]]);
    let verdict = if value.is_negative() { SocleVerdict::AppliesAndStrict } else { SocleVerdict::AppliesNoConclusion };
    Ok(SocleOutcome { verdict, local_dimensions: local, value: Some(value), reason: String::new() })
}

#[cfg(test)]
mod tests {
    use super::super::algebra::quotient_algebra;
    use super::super::groebner::{buchberger, MonomialOrder};
    use super::*;
    use crate::kernel::rat::{int, vec_of};

    fn alg(gens: &[&str], n: usize) -> QuotientAlgebra {
        let g: Vec<MPoly> = gens.iter().map(|s| MPoly::parse(s, n).unwrap()).collect();
        quotient_algebra(&buchberger(&g, MonomialOrder::GrLex).unwrap()).unwrap()
    }

    fn p(s: &str, n: usize) -> MPoly {
        MPoly::parse(s, n).unwrap()
    }

    #[test]
    fn cube_form() {
        let a = alg(&["x0^3"], 1);
        // I' = (x^3 - ε(2x^2 + 5x - 7))
        let phi = DeformationHom::new(vec![p("-2*x0^2 - 5*x0 + 7", 1)]);
        let f = deformation_form(&a, &phi).unwrap();
        assert_eq!(f.matrix.to_rows(), vec![vec_of(&[10, -21]), vec_of(&[-21, 0])]);
        assert!(!is_strict(&a, &phi).unwrap().verdict);
        let z = deformation_form(&a, &DeformationHom::zero(1, 1)).unwrap();
        assert!(z.matrix.is_zero());
    }

    #[test]
    fn circle_line() {
        let a = alg(&["1 - x0^2 - x1^2", "x0^2 - x0"], 2);
        let phi = DeformationHom::new(vec![p("1", 2), p("0", 2)]);
        let c = is_strict(&a, &phi).unwrap();
        assert!(c.verdict);
        assert_eq!(c.b_phi.dim(), 1);
        let pts = vec![vec_of(&[1, 0]), vec_of(&[0, 1]), vec_of(&[0, -1])];
        let s = socle_shortcut(&a, &pts, &phi, &p("x0*x1", 2)).unwrap();
        assert_eq!(s.verdict, SocleVerdict::AppliesAndStrict);
        assert_eq!(s.value, Some(int(-1)));
        let phi = DeformationHom::new(vec![p("-1", 2), p("0", 2)]);
        assert!(!is_strict(&a, &phi).unwrap().verdict);
        assert_eq!(socle_shortcut(&a, &pts, &phi, &p("x0", 2)), Err(Error::NotInRadical));
        assert_eq!(socle_shortcut(&a, &pts, &phi, &p("x0^2 - x0", 2)), Err(Error::InIdeal));
    }

    #[test]
    fn reduced_is_vacuously_strict() {
        let a = alg(&["x0^2 - 1"], 1);
        let c = is_strict(&a, &DeformationHom::new(vec![p("x0 + 3", 1)])).unwrap();
        assert!(c.verdict);
        assert_eq!(c.b_phi.dim(), 0);
    }

    #[test]
    fn ill_defined_hom_is_rejected() {
        // (x0, x0) : the relation f1 - f2 = 0 forces φ(f1) = φ(f2)
        let a = alg(&["x0", "x0"], 1);
        let phi = DeformationHom::new(vec![p("1", 1), p("0", 1)]);
        assert!(matches!(apply_deformation(&a, &phi), Err(Error::IllDefinedDeformation { .. })));
    }

    #[test]
    fn lift_independence() {
        let a = alg(&["x0^3"], 1);
        let phi = DeformationHom::new(vec![p("3*x0^2 + x0 - 2", 1)]);
        let def = apply_deformation(&a, &phi).unwrap();
        let nil = a.nilradical_basis().unwrap();
        let m0 = deformation_form_with_lifts(&def, &nil, &[]).unwrap();
        let m1 = deformation_form_with_lifts(&def, &nil, &[vec_of(&[4, -1, 2]), vec_of(&[-3, 5, 7])]).unwrap();
        assert_eq!(m0, m1);
    }
}
