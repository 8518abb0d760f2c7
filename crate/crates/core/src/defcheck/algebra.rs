//! Finite-dimensional quotient algebras `Q[x]/I` given by a Gröbner basis.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::Serialize;

use super::groebner::GroebnerBasis;
use crate::kernel::linalg::{self, Mat};
use crate::kernel::{MPoly, Monomial, Rat, Scalar, SymMat};
use crate::{Error, Result};

/// Matrix product over any scalar ring.
pub fn mul_s<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![S::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j].clone() + aik.clone() * b[k][j].clone();
            }
        }
    }
    out
}

pub fn trace_s<S: Scalar>(a: &[Vec<S>]) -> S {
    (0..a.len()).fold(S::zero(), |acc, i| acc + a[i][i].clone())
}

pub fn identity_s<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientAlgebra {
    #[serde(skip)]
    gb: GroebnerBasis,
    /// Standard monomials, ascending in the basis' order.
    #[serde(serialize_with = "ser_basis")]
    basis: Vec<Monomial>,
    #[serde(skip)]
    index: BTreeMap<Monomial, usize>,
    /// `mult[i]` is multiplication by `x_i`; column `c` holds the coordinates of `x_i · basis[c]`.
    #[serde(serialize_with = "ser_mats")]
    mult: Vec<Mat>,
}

fn ser_basis<S: serde::Serializer>(b: &[Monomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    let n = b.first().map_or(0, |m| m.0.len());
    b.iter()
        .map(|m| MPoly::term(n, m.clone(), Rat::one()).to_string())
        .collect::<Vec<_>>()
        .serialize(s)
}

fn ser_mats<S: serde::Serializer>(m: &[Mat], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    m.iter()
        .map(|a| a.iter().map(|r| r.iter().map(crate::kernel::rat::fmt_rat).collect::<Vec<_>>()).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .serialize(s)
}

pub fn quotient_algebra(gb: &GroebnerBasis) -> Result<QuotientAlgebra> {
    let n = gb.nvars();
    let leads = gb.leading_monomials();
    let mut basis: Vec<Monomial> = Vec::new();
    if !gb.is_unit() {
        for i in 0..n {
            let pure = leads.iter().any(|l| l.0[i] > 0 && l.0.iter().enumerate().all(|(j, &e)| j == i || e == 0));
            if !pure {
                return Err(Error::NotZeroDimensional);
            }
        }
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        let mut frontier = vec![Monomial::one(n)];
        while let Some(m) = frontier.pop() {
            if seen.contains(&m) || leads.iter().any(|l| l.divides(&m)) {
                continue;
            }
            seen.insert(m.clone());
            for i in 0..n {
                frontier.push(m.mul(&Monomial::var(n, i)));
            }
        }
        basis = seen.into_iter().collect();
        basis.sort_by(|a, b| gb.order.cmp(a, b));
    }
    let index: BTreeMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut a = QuotientAlgebra { gb: gb.clone(), basis, index, mult: vec![] };
    let mult: Vec<Mat> = (0..n).map(|i| a.mult_matrix_of(&MPoly::var(n, i))).collect();
    for i in 0..n {
        for j in 0..i {
            if linalg::mat_mul(&mult[i], &mult[j]) != linalg::mat_mul(&mult[j], &mult[i]) {
                return Err(Error::Consistency("multiplication matrices do not commute".into()));
            }
        }
    }
    a.mult = mult;
    Ok(a)
}

impl QuotientAlgebra {
    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.gb.nvars()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_poly(&self, j: usize) -> MPoly {
        MPoly::term(self.nvars(), self.basis[j].clone(), Rat::one())
    }

    pub fn mult(&self) -> &[Mat] {
        &self.mult
    }

    /// Coordinates of the class of `p`.
    pub fn coords(&self, p: &MPoly) -> Vec<Rat> {
        let r = self.gb.normal_form(p);
        let mut v = vec![Rat::zero(); self.dim()];
        for (m, c) in r.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn poly_of(&self, v: &[Rat]) -> MPoly {
        let mut p = MPoly::zero(self.nvars());
        for (c, m) in v.iter().zip(&self.basis) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn mult_matrix_of(&self, p: &MPoly) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim()).map(|c| self.coords(&(p * &self.basis_poly(c)))).collect();
        linalg::transpose(&cols)
    }

    pub fn mult_matrix(&self, v: &[Rat]) -> Mat {
        self.mult_matrix_of(&self.poly_of(v))
    }

    /// Trace of multiplication by `p`.
    pub fn trace_of(&self, p: &MPoly) -> Rat {
        linalg::trace(&self.mult_matrix_of(p))
    }

    /// `(b_i, b_j) ↦ tr(b_i b_j)` in the standard monomial basis.
    pub fn trace_form(&self) -> SymMat {
        let d = self.dim();
        let tau: Vec<Rat> = (0..d).map(|k| linalg::trace(&self.mult_matrix_of(&self.basis_poly(k)))).collect();
        SymMat::from_fn(d, |i, j| {
            let prod = self.basis[i].mul(&self.basis[j]);
            let c = self.coords(&MPoly::term(self.nvars(), prod, Rat::one()));
            crate::kernel::rat::dot(&c, &tau)
        })
    }

    /// Basis of the kernel of the trace form, each element checked to be nilpotent.
    pub fn nilradical_basis(&self) -> Result<Vec<Vec<Rat>>> {
        let d = self.dim();
        let ker = linalg::nullspace(&self.trace_form().to_rows(), d);
        for v in &ker {
            if !linalg::is_zero(&linalg::mat_pow(&self.mult_matrix(v), d)) {
                return Err(Error::Consistency("trace-form kernel element is not nilpotent".into()));
            }
        }
        Ok(ker)
    }

    pub fn is_reduced(&self) -> bool {
        crate::kernel::ldlt_signature(&self.trace_form()).n_zero == 0
    }

    /// Dimension of the local algebra at a rational point of `Spec A`.
    pub fn local_dimension(&self, point: &[Rat]) -> Result<usize> {
        let d = self.dim();
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut stacked: Mat = Vec::new();
        for (m, pi) in self.mult.iter().zip(point) {
            let mut shifted = m.clone();
            for (k, row) in shifted.iter_mut().enumerate() {
                row[k] -= pi;
            }
            stacked.extend(linalg::mat_pow(&shifted, d));
        }
        Ok(d - linalg::rank(&stacked))
    }
}

#[cfg(test)]
mod tests {
    use super::super::groebner::{buchberger, MonomialOrder};
    use super::*;
    use crate::kernel::rat::{int, vec_of};
    use crate::kernel::UPoly;
    use crate::realcert::hermite_matrix;

    fn alg(gens: &[&str], n: usize) -> Result<QuotientAlgebra> {
        let g: Vec<MPoly> = gens.iter().map(|s| MPoly::parse(s, n).unwrap()).collect();
        quotient_algebra(&buchberger(&g, MonomialOrder::GrLex)?)
    }

    #[test]
    fn cube() {
        let a = alg(&["x0^3"], 1).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.mult()[0], vec![vec_of(&[0, 0, 0]), vec_of(&[1, 0, 0]), vec_of(&[0, 1, 0])]);
        assert_eq!(a.trace_form(), SymMat::diag(&vec_of(&[3, 0, 0])));
        assert_eq!(a.nilradical_basis().unwrap(), vec![vec_of(&[0, 1, 0]), vec_of(&[0, 0, 1])]);
        assert!(!a.is_reduced());
    }

    #[test]
    fn two_points() {
        let a = alg(&["x0^2 - 1"], 1).unwrap();
        assert_eq!(a.trace_form(), SymMat::diag(&vec_of(&[2, 2])));
        assert!(a.nilradical_basis().unwrap().is_empty());
        let f = UPoly::new(vec_of(&[3, -1, 0, 2, 1]));
        let a = quotient_algebra(&buchberger(&[MPoly::from_upoly(&f, 1, 0)], MonomialOrder::GrLex).unwrap()).unwrap();
        assert_eq!(a.trace_form(), hermite_matrix(&f).unwrap());
    }

    #[test]
    fn circle_line() {
        let a = alg(&["1 - x0^2 - x1^2", "x0^2 - x0"], 2).unwrap();
        assert_eq!(a.dim(), 4);
        let nil = a.nilradical_basis().unwrap();
        assert_eq!(nil.len(), 1);
        assert_eq!(a.poly_of(&nil[0]), MPoly::parse("x0*x1", 2).unwrap());
        assert_eq!(a.local_dimension(&vec_of(&[1, 0])).unwrap(), 2);
        assert_eq!(a.local_dimension(&vec_of(&[0, 1])).unwrap(), 1);
        assert_eq!(a.local_dimension(&vec_of(&[0, 2])).unwrap(), 0);
        assert!(crate::kernel::ldlt_signature(&a.trace_form()).is_psd());
        assert_eq!(a.trace_of(&MPoly::one(2)), int(4));
    }

    #[test]
    fn positive_dimensional() {
        assert_eq!(alg(&["x1"], 2), Err(Error::NotZeroDimensional));
    }
}
