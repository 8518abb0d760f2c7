//! Hilbert series and Hilbert polynomials of monomial quotients.

use num_traits::Zero;
use serde::Serialize;

use super::monomial::{minimalize, MonomialIdeal};
use crate::kernel::rat::int;
use crate::kernel::{Monomial, Rat, UPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// Numerator of the series over `(1 - z)^nvars`.
    pub numerator: Vec<i64>,
    /// `h(z)` with the series equal to `h(z) / (1 - z)^krull_dim`.
    pub h: Vec<i64>,
    pub krull_dim: usize,
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i64,
    /// `h(1)`.
    pub degree: i64,
    pub hilbert_polynomial: UPoly,
    /// The Hilbert function agrees with the polynomial from this degree on.
    pub regularity_bound: usize,
}

impl HilbertData {
    /// Value of the Hilbert function in degree `d`, read off the series.
    pub fn hilbert_function(&self, d: usize) -> Rat {
        let mut acc = Rat::zero();
        for (k, &c) in self.numerator.iter().enumerate() {
            if k <= d && c != 0 {
                acc += int(c) * binomial((d - k + self.nvars - 1) as u64, (self.nvars - 1) as u64);
            }
        }
        acc
    }
}

fn binomial(n: u64, k: u64) -> Rat {
    let mut r = Rat::from_integer(1.into());
    for i in 0..k {
        r = r * int((n - i) as i64) / int((i + 1) as i64);
    }
    r
}

fn poly_sub(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] -= c;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Numerator of the Hilbert series of `S / (gens)` over `(1 - z)^nvars`.
pub fn series_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    // pairwise coprime generators form a regular sequence
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.gcd(b).is_one()));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut next = acc.clone();
            poly_sub(&mut next, &acc, g.degree() as usize);
            acc = next;
        }
        return trim(acc);
    }
    let (last, rest) = gens.split_last().expect("nonempty");
    let mut n = series_numerator(rest);
    let colon: Vec<Monomial> = rest.iter().map(|g| g.gcd(last).quotient_of(g)).collect();
    poly_sub(&mut n, &series_numerator(&colon), last.degree() as usize);
    trim(n)
}

/// `binomial(z - k + m, m)` as a polynomial in `z`.
fn shifted_binomial(k: i64, m: usize) -> UPoly {
    let mut p = UPoly::one();
    for j in 0..m as i64 {
        p = &p * &UPoly::new(vec![int(m as i64 - k - j), int(1)]);
    }
    let fact: Rat = (1..=m as i64).map(int).fold(int(1), |a, b| a * b);
    p.scale(&(int(1) / fact))
}

pub fn hilbert(ideal: &MonomialIdeal) -> HilbertData {
    let nvars = ideal.nvars();
    let numerator = series_numerator(ideal.gens());
    let mut h = numerator.clone();
    let mut krull_dim = nvars;
    while krull_dim > 0 && !h.is_empty() && h.iter().sum::<i64>() == 0 {
        // divide by (1 - z)
        let mut q = vec![0i64; h.len() - 1];
        let mut carry = 0;
        for (i, qi) in q.iter_mut().enumerate() {
            carry += h[i];
            *qi = carry;
        }
        h = trim(q);
        krull_dim -= 1;
    }
    if h.is_empty() {
        krull_dim = 0;
    }
    let mut hp = UPoly::zero();
    if krull_dim > 0 {
        for (k, &c) in h.iter().enumerate() {
            hp = &hp + &shifted_binomial(k as i64, krull_dim - 1).scale(&int(c));
        }
    }
    let degree = h.iter().sum();
    let regularity_bound = (h.len() as i64 - krull_dim as i64).max(0) as usize;
    HilbertData {
        nvars,
        numerator,
        h,
        krull_dim,
        dim: krull_dim as i64 - 1,
        degree,
        hilbert_polynomial: hp,
        regularity_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(s: &str, n: usize) -> UPoly {
        hilbert(&MonomialIdeal::parse(s, n).unwrap()).hilbert_polynomial
    }

    #[test]
    fn examples() {
        assert_eq!(hp("x2^2, x2*x3, x3^2", 4), UPoly::new(vec![int(1), int(3)]));
        assert_eq!(hp("x1", 2), UPoly::constant(int(1)));
        // binomial(z + 3, 3) for the zero ideal in four variables
        let z3 = hp("0", 4);
        for d in 0..6 {
            assert_eq!(z3.eval(&int(d)), binomial(d as u64 + 3, 3));
        }
        assert!(hp("x0, x1", 2).is_zero());
        assert!(hp("1", 3).is_zero());
    }

    #[test]
    fn function_matches_enumeration() {
        let i = MonomialIdeal::parse("x0*x1^2, x1*x2^3, x0^2*x2, x3^4", 4).unwrap();
        let data = hilbert(&i);
        for d in 0..12 {
            assert_eq!(data.hilbert_function(d), int(i.standard_monomial_count(d as u32) as i64));
            if d >= data.regularity_bound {
                assert_eq!(data.hilbert_polynomial.eval(&int(d as i64)), int(i.standard_monomial_count(d as u32) as i64));
            }
        }
    }

    #[test]
    fn degree_and_dimension() {
        let d = hilbert(&MonomialIdeal::parse("x2^2, x2*x3, x3^2", 4).unwrap());
        assert_eq!(d.dim, 1);
        assert_eq!(d.degree, 3);
        assert_eq!(d.h, vec![1, 2]);
    }
}
