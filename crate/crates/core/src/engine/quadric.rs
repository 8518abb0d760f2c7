//! Exact hyperbolicity decision for quadratic forms.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::kernel::rat::{int, serde_rat};
use crate::kernel::{ldlt_signature, MPoly, Rat, SignatureCert, SymMat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricVerdict {
    pub hyperbolic: bool,
    /// Gram matrix of `q`, multiplied by `-1` when `q(e) < 0`.
    pub gram: SymMat,
    #[serde(with = "serde_rat")]
    pub value_at_e: Rat,
    pub signature: SignatureCert,
}

pub fn gram_matrix(q: &MPoly) -> Result<SymMat> {
    if !q.is_zero() && (q.degree() != 2 || !q.is_homogeneous()) {
        return Err(Error::WrongDegree { expected: 2, got: q.degree() });
    }
    let n = q.nvars();
    let mut g = SymMat::zeros(n);
    for (m, c) in q.terms() {
        let idx: Vec<usize> = m.0.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i).take(k as usize)).collect();
        if idx[0] == idx[1] {
            g.set(idx[0], idx[0], c.clone());
        } else {
            g.set(idx[0], idx[1], c / int(2));
        }
    }
    Ok(g)
}

/// `q` is hyperbolic with respect to `e` iff `q(e) != 0` and, with the sign
/// fixed so that `q(e) > 0`, its Gram matrix has exactly one positive eigenvalue.
pub fn quadric_hyperbolicity(q: &MPoly, e: &[Rat]) -> Result<QuadricVerdict> {
    if e.len() != q.nvars() {
        return Err(Error::DimensionMismatch { expected: q.nvars(), got: e.len() });
    }
    let mut gram = gram_matrix(q)?;
    let value_at_e = q.eval(e);
    if value_at_e.is_negative() {
        gram = gram.scale(&int(-1));
    }
    let signature = ldlt_signature(&gram);
    let hyperbolic = !value_at_e.is_zero() && signature.n_pos == 1;
    Ok(QuadricVerdict { hyperbolic, gram, value_at_e, signature })
}
