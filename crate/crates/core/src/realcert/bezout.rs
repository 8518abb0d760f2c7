//! Bézout matrices of pairs of binary forms and interlacing certificates.

use num_traits::Zero;
use serde::Serialize;

use crate::kernel::{ldlt_signature, BinaryForm, Rat, SignatureCert, SymMat};
use crate::{Error, Result};

/// Coefficient matrix of `(p(u) q(t) - p(t) q(u)) / (t - u) = Σ B_ij t^i u^j`,
/// with `p(t) = p(1, t)`. Both forms must have the same degree `d >= 1`;
/// a form of smaller apparent degree should be padded with `s` first.
pub fn bezout_matrix(p: &BinaryForm, q: &BinaryForm) -> Result<SymMat> {
    let d = p.degree();
    if q.degree() != d {
        return Err(Error::DegreeMismatch(d, q.degree()));
    }
    if d == 0 {
        return Err(Error::WrongDegree { expected: 1, got: 0 });
    }
    let (pc, qc) = (p.coeffs(), q.coeffs());
    let mut b = vec![vec![Rat::zero(); d]; d];
    for k in 0..=d {
        for l in k + 1..=d {
            let w = &pc[k] * &qc[l] - &pc[l] * &qc[k];
            if w.is_zero() {
                continue;
            }
            for i in k..l {
                b[i][k + l - 1 - i] += &w;
            }
        }
    }
    SymMat::from_rows(&b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InterlaceVerdict {
    StrictlyInterlacing,
    NotStrictlyInterlacing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterlaceCert {
    pub verdict: InterlaceVerdict,
    pub bezout: SymMat,
    /// `1` for positive definite, `-1` for negative definite, `0` otherwise.
    pub orientation: i32,
    pub signature: SignatureCert,
    pub note: Option<String>,
}

/// Strict interlacing of the zeros of `p` and `q` on the real projective line,
/// certified by definiteness of the Bézout matrix.
pub fn interlace_certificate(p: &BinaryForm, q: &BinaryForm) -> Result<InterlaceCert> {
    let bezout = bezout_matrix(p, q)?;
    if bezout.is_zero() {
        return Err(Error::Proportional);
    }
    let signature = ldlt_signature(&bezout);
    let orientation = if signature.is_pd() {
        1
    } else if signature.is_nd() {
        -1
    } else {
        0
    };
    let mut note = None;
    let g = p.dehomogenize().gcd(&q.dehomogenize());
    if g.degree() > 0 {
        note = Some(format!("common root: gcd {g}"));
    } else if p.root_at_infinity() > 0 && q.root_at_infinity() > 0 {
        note = Some("common root at (0:1)".to_string());
    }
    let verdict = if orientation != 0 && note.is_none() {
        InterlaceVerdict::StrictlyInterlacing
    } else {
        InterlaceVerdict::NotStrictlyInterlacing
    };
    Ok(InterlaceCert { verdict, bezout, orientation, signature, note })
}
