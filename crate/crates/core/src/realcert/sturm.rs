//! Sturm chains over the rationals.

use num_traits::Signed;

use crate::kernel::{Rat, UPoly};
use crate::{Error, Result};

pub fn sturm_sequence(f: &UPoly) -> Result<Vec<UPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        seq.push(-&r);
    }
    seq.pop();
    Ok(seq)
}

fn changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sign_at_infinity(p: &UPoly, positive: bool) -> i32 {
    let lead = if p.leading().is_positive() { 1 } else { -1 };
    if positive || p.degree() % 2 == 0 {
        lead
    } else {
        -lead
    }
}

fn sign_at(p: &UPoly, t: &Rat) -> i32 {
    crate::kernel::rat::sign(&p.eval(t))
}

/// Number of distinct real roots of `f`.
pub fn sturm_distinct_real_roots(f: &UPoly) -> Result<usize> {
    let seq = sturm_sequence(f)?;
    let lo = changes(seq.iter().map(|p| sign_at_infinity(p, false)));
    let hi = changes(seq.iter().map(|p| sign_at_infinity(p, true)));
    Ok(lo - hi)
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn sturm_count_in(f: &UPoly, a: &Rat, b: &Rat) -> Result<usize> {
    let seq = sturm_sequence(f)?;
    let va = changes(seq.iter().map(|p| sign_at(p, a)));
    let vb = changes(seq.iter().map(|p| sign_at(p, b)));
    Ok(va.saturating_sub(vb))
}
