//! Restriction of a projective scheme, and a deformation of it, to a linear
//! subspace `E'` containing the center `E`.

use serde::Serialize;

use super::algebra::{quotient_algebra, QuotientAlgebra};
use super::deform::DeformationHom;
use super::groebner::{buchberger, MonomialOrder};
use crate::engine::LinearSubspace;
use crate::kernel::rat::{serde_rat_mat, serde_rat_vec};
use crate::kernel::{MPoly, Rat};
use crate::{Error, Result};

/// Affine coordinates `u` on `E' \ E`: the point `base + Σ u_k directions[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineChart {
    #[serde(with = "serde_rat_vec")]
    pub base: Vec<Rat>,
    #[serde(with = "serde_rat_mat")]
    pub directions: Vec<Vec<Rat>>,
}

impl AffineChart {
    /// The chart on `E'` complementary to a hyperplane `E` of it.
    pub fn new(e: &LinearSubspace, e_prime: &LinearSubspace) -> Result<Self> {
        if e.nvars() != e_prime.nvars() {
            return Err(Error::DimensionMismatch { expected: e.nvars(), got: e_prime.nvars() });
        }
        if !e_prime.contains(e) {
            return Err(Error::NotContained);
        }
        if e_prime.dim() != e.dim() + 1 {
            return Err(Error::InvalidSubspace(format!(
                "E' must have dimension {} but has {}",
                e.dim() + 1,
                e_prime.dim()
            )));
        }
        let base = e_prime
            .spanning_points()
            .iter()
            .find(|p| !e.contains_point(p))
            .cloned()
            .expect("E' is strictly larger than E");
        Ok(AffineChart { base, directions: e.spanning_points().clone() })
    }

    pub fn nvars(&self) -> usize {
        self.directions.len()
    }

    pub fn point(&self, u: &[Rat]) -> Vec<Rat> {
        let mut x = self.base.clone();
        for (uk, d) in u.iter().zip(&self.directions) {
            for (xi, di) in x.iter_mut().zip(d) {
                *xi += uk * di;
            }
        }
        x
    }

    /// `g(base + Σ u_k d_k)` as a polynomial in `u`.
    pub fn pull_back(&self, g: &MPoly) -> Result<MPoly> {
        let m = self.nvars();
        let subs: Vec<MPoly> = (0..self.base.len())
            .map(|i| {
                let mut s = MPoly::constant(m, self.base[i].clone());
                for (k, d) in self.directions.iter().enumerate() {
                    s = &s + &MPoly::var(m, k).scale(&d[i]);
                }
                s
            })
            .collect();
        g.substitute(&subs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Restriction {
    pub chart: AffineChart,
    pub generators: Vec<MPoly>,
    pub algebra: QuotientAlgebra,
    pub phi: DeformationHom,
}

/// `X ∩ E'` as a zero-dimensional algebra in the affine chart of `E'`,
/// together with the induced images of the generators.
pub fn restrict_deformation(
    gens: &[MPoly],
    images: &[MPoly],
    e: &LinearSubspace,
    e_prime: &LinearSubspace,
) -> Result<Restriction> {
    if gens.len() != images.len() {
        return Err(Error::DimensionMismatch { expected: gens.len(), got: images.len() });
    }
    let chart = AffineChart::new(e, e_prime)?;
    let generators: Vec<MPoly> = gens.iter().map(|g| chart.pull_back(g)).collect::<Result<_>>()?;
    let restricted: Vec<MPoly> = images.iter().map(|g| chart.pull_back(g)).collect::<Result<_>>()?;
    let gb = buchberger(&generators, MonomialOrder::GrLex)?;
    let algebra = quotient_algebra(&gb)?;
    Ok(Restriction { chart, generators, algebra, phi: DeformationHom::new(restricted) })
}
