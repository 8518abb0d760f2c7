//! Linear subspaces of projective space, held both as spans and as zero sets.

use num_traits::Zero;
use serde::Serialize;

use crate::kernel::linalg::{self, Mat};
use crate::kernel::rat::{dot, serde_rat_mat};
use crate::kernel::{MPoly, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSubspace {
    nvars: usize,
    /// Reduced row echelon basis of the underlying vector space.
    #[serde(with = "serde_rat_mat")]
    span: Mat,
    /// Reduced row echelon matrix of defining linear forms.
    #[serde(with = "serde_rat_mat")]
    forms: Mat,
}

fn check_rows(nvars: usize, rows: &[Vec<Rat>]) -> Result<()> {
    for r in rows {
        if r.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: r.len() });
        }
    }
    Ok(())
}

impl LinearSubspace {
    pub fn from_points(nvars: usize, points: &[Vec<Rat>]) -> Result<Self> {
        check_rows(nvars, points)?;
        let (span, _) = linalg::rref(&points.to_vec());
        if span.is_empty() {
            return Err(Error::InvalidSubspace("no nonzero spanning point".into()));
        }
        let (forms, _) = linalg::rref(&linalg::nullspace(&span, nvars));
        Ok(LinearSubspace { nvars, span, forms })
    }

    /// The common zero set of the given linear forms (coefficient vectors).
    pub fn from_forms(nvars: usize, forms: &[Vec<Rat>]) -> Result<Self> {
        check_rows(nvars, forms)?;
        let (forms, _) = linalg::rref(&forms.to_vec());
        let (span, _) = linalg::rref(&linalg::nullspace(&forms, nvars));
        if span.is_empty() {
            return Err(Error::InvalidSubspace("the forms have no common projective zero".into()));
        }
        Ok(LinearSubspace { nvars, span, forms })
    }

    /// The coordinate subspace `V(x0, ..., xk)`.
    pub fn coordinate(nvars: usize, k: usize) -> Result<Self> {
        let forms: Mat = (0..=k)
            .map(|i| (0..nvars).map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() }).collect())
            .collect();
        Self::from_forms(nvars, &forms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Projective dimension.
    pub fn dim(&self) -> i64 {
        self.span.len() as i64 - 1
    }

    pub fn spanning_points(&self) -> &Mat {
        &self.span
    }

    pub fn defining_forms(&self) -> &Mat {
        &self.forms
    }

    pub fn defining_polys(&self) -> Vec<MPoly> {
        self.forms.iter().map(|f| MPoly::linear_form(f)).collect()
    }

    pub fn contains_point(&self, p: &[Rat]) -> bool {
        p.len() == self.nvars && self.forms.iter().all(|f| dot(f, p).is_zero())
    }

    pub fn contains(&self, other: &LinearSubspace) -> bool {
        other.span.iter().all(|p| self.contains_point(p))
    }

    pub fn join(&self, p: &[Rat]) -> Result<Self> {
        let mut pts = self.span.clone();
        pts.push(p.to_vec());
        Self::from_points(self.nvars, &pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::vec_of;

    #[test]
    fn twisted_cubic_center_forms() {
        let e = LinearSubspace::from_points(4, &[vec_of(&[4, 0, 1, 0]), vec_of(&[0, 1, 0, 1])]).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(e.defining_forms(), &vec![vec_of(&[1, 0, -4, 0]), vec_of(&[0, 1, 0, -1])]);
        let again = LinearSubspace::from_forms(4, e.defining_forms()).unwrap();
        assert_eq!(again, e);
    }

    #[test]
    fn containment_and_join() {
        let e = LinearSubspace::coordinate(4, 1).unwrap();
        assert_eq!(e.dim(), 1);
        let big = e.join(&vec_of(&[1, 1, 0, 0])).unwrap();
        assert_eq!(big.dim(), 2);
        assert!(big.contains(&e));
        assert!(!e.contains(&big));
        assert!(LinearSubspace::from_points(3, &[vec_of(&[0, 0, 0])]).is_err());
    }
}
