//! Dense exact linear algebra over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rat::Rat;

pub type Mat = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect()
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Rat::zero(); c]; r]
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = zeros(n, m);
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[Rat]) -> Vec<Rat> {
    a.iter().map(|row| super::rat::dot(row, v)).collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let c = a.first().map_or(0, |r| r.len());
    (0..c).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn trace(a: &Mat) -> Rat {
    (0..a.len()).fold(Rat::zero(), |acc, i| acc + &a[i][i])
}

/// Reduced row echelon form and pivot columns.
pub fn rref(a: &Mat) -> (Mat, Vec<usize>) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.retain(|row| row.iter().any(|v| !v.is_zero()));
    (m, pivots)
}

pub fn rank(a: &Mat) -> usize {
    rref(a).1.len()
}

/// Rank of the span of sparse vectors given as `(index, value)` pairs.
pub fn sparse_rank(vectors: impl IntoIterator<Item = Vec<(usize, Rat)>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for v in vectors {
        let Some(mut v) = primitive(v) else { continue };
        while let Some((&lead, c)) = v.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            let g = c.gcd(&p[&lead]);
            let (mv, mp) = (&p[&lead] / &g, c / &g);
            let mut w: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (i, x) in &v {
                w.insert(*i, x * &mv);
            }
            for (i, x) in p {
                let e = w.entry(*i).or_insert_with(BigInt::zero);
                *e -= x * &mp;
                if e.is_zero() {
                    w.remove(i);
                }
            }
            let content = w.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_one() && !content.is_zero() {
                w.values_mut().for_each(|x| *x = &*x / &content);
            }
            v = w;
        }
    }
    pivots.len()
}

/// Clears denominators and common factors; `None` for the zero vector.
fn primitive(v: Vec<(usize, Rat)>) -> Option<BTreeMap<usize, BigInt>> {
    let v: Vec<(usize, Rat)> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    if v.is_empty() {
        return None;
    }
    let den = v.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints: BTreeMap<usize, BigInt> = v
        .into_iter()
        .fold(BTreeMap::new(), |mut acc, (i, c)| {
            *acc.entry(i).or_insert_with(BigInt::zero) += c.numer() * (&den / c.denom());
            acc
        })
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let content = ints.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|(i, x)| (i, x / &content)).collect())
}

/// Basis of `{v : a v = 0}` for a matrix with `cols` columns; one basis
/// vector per free column, carrying a 1 there.
pub fn nullspace(a: &Mat, cols: usize) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `a x = b`; `None` when inconsistent. Free variables are set to 0.
pub fn solve(a: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Mat = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

pub fn mat_pow(a: &Mat, k: usize) -> Mat {
    let mut acc = identity(a.len());
    for _ in 0..k {
        acc = mat_mul(&acc, a);
    }
    acc
}

pub fn is_zero(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(|v| v.is_zero()))
}
