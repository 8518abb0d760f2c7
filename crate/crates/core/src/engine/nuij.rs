//! The Nuij operator `f ↦ f + s·ℓ·D_e f`.

use num_traits::Signed;

use crate::kernel::{MPoly, Rat};
use crate::{Error, Result};

pub fn nuij_step(f: &MPoly, e: &[Rat], s: &Rat, l: &MPoly) -> Result<MPoly> {
    if !l.is_zero() && (l.degree() != 1 || !l.is_homogeneous()) {
        return Err(Error::NotLinear);
    }
    if l.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), got: l.nvars() });
    }
    let d = f.directional_derivative(e)?;
    Ok(f + &(l * &d).scale(s))
}

/// All intermediate polynomials of the smoothing: `deg f` sweeps, each applying
/// one step per variable `x0, ..., xn` in order. Entry `k` is the result after
/// `k` sweeps; entry 0 is `f`.
pub fn nuij_sweeps(f: &MPoly, e: &[Rat], s: &Rat) -> Result<Vec<MPoly>> {
    if !s.is_positive() {
        return Err(Error::NonPositiveParameter);
    }
    let n = f.nvars();
    let mut cur = f.clone();
    let mut out = vec![cur.clone()];
    for _ in 0..f.degree().max(0) {
        for i in 0..n {
            cur = nuij_step(&cur, e, s, &MPoly::var(n, i))?;
        }
        out.push(cur.clone());
    }
    Ok(out)
}

pub fn nuij_smooth(f: &MPoly, e: &[Rat], s: &Rat) -> Result<MPoly> {
    Ok(nuij_sweeps(f, e, s)?.pop().expect("at least the input"))
}
