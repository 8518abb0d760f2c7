//! Hermite matrices: the trace form of `Q[x]/(f)` in the monomial basis.

use num_traits::Zero;
use serde::Serialize;

use crate::kernel::{ldlt_signature, Rat, SignatureCert, SymMat, UPoly};
use crate::{Error, Result};

/// Power sums `p_0..p_{count-1}` of the roots of `f`, from Newton's identities.
pub fn newton_power_sums(f: &UPoly, count: usize) -> Result<Vec<Rat>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    let d = f.degree() as usize;
    // c[i] is the coefficient of x^(d-i)
    let c: Vec<Rat> = (0..=d).map(|i| f.coeff(d - i)).collect();
    let mut p: Vec<Rat> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            p.push(Rat::from_integer(d.into()));
            continue;
        }
        let mut acc = Rat::zero();
        for i in 1..=k.min(d) {
            if i == k {
                acc -= &c[i] * Rat::from_integer(k.into());
            } else {
                acc -= &c[i] * &p[k - i];
            }
        }
        p.push(acc);
    }
    Ok(p)
}

/// `H_ij = p_(i+j)` for `0 <= i, j < deg f`.
pub fn hermite_matrix(f: &UPoly) -> Result<SymMat> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree() as usize;
    let p = newton_power_sums(f, (2 * d).max(1))?;
    Ok(SymMat::from_fn(d, |i, j| p[i + j].clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootTag {
    AllRealSimple,
    AllRealWithMultiplicity,
    NotAllReal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealRootStatus {
    pub tag: RootTag,
    pub distinct_real_count: usize,
    /// Number of distinct complex roots.
    pub rank: usize,
    #[serde(skip)]
    pub cert: SignatureCert,
}

impl RealRootStatus {
    pub fn all_real(&self) -> bool {
        self.tag != RootTag::NotAllReal
    }
}

pub fn real_rooted_status(f: &UPoly) -> Result<RealRootStatus> {
    let h = hermite_matrix(f)?;
    let cert = ldlt_signature(&h);
    let d = h.dim();
    let tag = if cert.n_neg > 0 {
        RootTag::NotAllReal
    } else if cert.rank() == d {
        RootTag::AllRealSimple
    } else {
        RootTag::AllRealWithMultiplicity
    };
    Ok(RealRootStatus {
        tag,
        distinct_real_count: cert.signature() as usize,
        rank: cert.rank(),
        cert,
    })
}
