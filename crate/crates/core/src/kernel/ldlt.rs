//! Exact symmetric-pivoted LDLᵀ with 1×1 and 2×2 blocks.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::linalg::{self, Mat};
use super::rat::{serde_rat, serde_rat_mat, Rat};
use super::symmat::SymMat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PivotBlock {
    One {
        #[serde(with = "serde_rat")]
        d: Rat,
    },
    /// `[[a, b], [b, c]]`
    Two {
        #[serde(with = "serde_rat")]
        a: Rat,
        #[serde(with = "serde_rat")]
        b: Rat,
        #[serde(with = "serde_rat")]
        c: Rat,
    },
}

impl PivotBlock {
    pub fn size(&self) -> usize {
        match self {
            PivotBlock::One { .. } => 1,
            PivotBlock::Two { .. } => 2,
        }
    }

    /// (positive, negative, zero) eigenvalue counts of the block.
    pub fn inertia(&self) -> (usize, usize, usize) {
        match self {
            PivotBlock::One { d } => {
                if d.is_positive() {
                    (1, 0, 0)
                } else if d.is_negative() {
                    (0, 1, 0)
                } else {
                    (0, 0, 1)
                }
            }
            PivotBlock::Two { a, b, c } => {
                let det = a * c - b * b;
                if det.is_negative() {
                    (1, 1, 0)
                } else if det.is_positive() {
                    if a.is_positive() {
                        (2, 0, 0)
                    } else {
                        (0, 2, 0)
                    }
                } else {
                    let tr = a + c;
                    if tr.is_positive() {
                        (1, 0, 1)
                    } else if tr.is_negative() {
                        (0, 1, 1)
                    } else {
                        (0, 0, 2)
                    }
                }
            }
        }
    }
}

/// Inertia of a symmetric matrix together with the factorization proving it:
/// `P·M·Pᵀ = L·D·Lᵀ` where row `i` of `P·M·Pᵀ` is row `perm[i]` of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureCert {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
    pub perm: Vec<usize>,
    #[serde(with = "serde_rat_mat")]
    pub l: Mat,
    pub blocks: Vec<PivotBlock>,
}

impl SignatureCert {
    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn rank(&self) -> usize {
        self.n_pos + self.n_neg
    }

    pub fn is_pd(&self) -> bool {
        self.n_pos == self.dim()
    }

    pub fn is_nd(&self) -> bool {
        self.n_neg == self.dim()
    }

    pub fn is_psd(&self) -> bool {
        self.n_neg == 0
    }

    pub fn is_definite(&self) -> bool {
        self.is_pd() || self.is_nd()
    }

    /// `n_pos − n_neg`.
    pub fn signature(&self) -> i64 {
        self.n_pos as i64 - self.n_neg as i64
    }

    pub fn d_matrix(&self) -> Mat {
        let n = self.dim();
        let mut d = linalg::zeros(n, n);
        let mut k = 0;
        for b in &self.blocks {
            match b {
                PivotBlock::One { d: v } => d[k][k] = v.clone(),
                PivotBlock::Two { a, b, c } => {
                    d[k][k] = a.clone();
                    d[k][k + 1] = b.clone();
                    d[k + 1][k] = b.clone();
                    d[k + 1][k + 1] = c.clone();
                }
            }
            k += b.size();
        }
        d
    }

    /// Rechecks the factorization and the reported counts against `m`.
    pub fn verify(&self, m: &SymMat) -> bool {
        let n = m.dim();
        if self.dim() != n || self.l.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in &self.perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        for i in 0..n {
            if self.l[i].len() != n || !self.l[i][i].is_one() {
                return false;
            }
            if self.l[i][i + 1..].iter().any(|v| !v.is_zero()) {
                return false;
            }
        }
        if self.blocks.iter().map(PivotBlock::size).sum::<usize>() != n {
            return false;
        }
        // 2×2 blocks must not be split by L
        let mut k = 0;
        for b in &self.blocks {
            if b.size() == 2 && !self.l[k + 1][k].is_zero() {
                return false;
            }
            k += b.size();
        }
        let ldl = linalg::mat_mul(&linalg::mat_mul(&self.l, &self.d_matrix()), &linalg::transpose(&self.l));
        for i in 0..n {
            for j in 0..n {
                if &ldl[i][j] != m.get(self.perm[i], self.perm[j]) {
                    return false;
                }
            }
        }
        let (p, q, z) = self.blocks.iter().map(PivotBlock::inertia).fold((0, 0, 0), |a, b| {
            (a.0 + b.0, a.1 + b.1, a.2 + b.2)
        });
        (p, q, z) == (self.n_pos, self.n_neg, self.n_zero)
    }
}

fn sym_swap(a: &mut Mat, l: &mut Mat, perm: &mut [usize], k: usize, i: usize) {
    if k == i {
        return;
    }
    a.swap(k, i);
    for row in a.iter_mut() {
        row.swap(k, i);
    }
    perm.swap(k, i);
    for c in 0..k {
        let t = l[k][c].clone();
        l[k][c] = l[i][c].clone();
        l[i][c] = t;
    }
}

/// Exact inertia of `m` via block LDLᵀ. A nonzero diagonal entry is used as
/// a 1×1 pivot; when the remaining diagonal vanishes a nonzero off-diagonal
/// entry gives a 2×2 pivot.
pub fn ldlt_signature(m: &SymMat) -> SignatureCert {
    let n = m.dim();
    let mut a = m.to_rows();
    let mut l = linalg::identity(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();
    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            sym_swap(&mut a, &mut l, &mut perm, k, i);
            let d = a[k][k].clone();
            let dinv = d.recip();
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let lr = &a[r][k] * &dinv;
                for c in k + 1..n {
                    if !a[k][c].is_zero() {
                        let t = &lr * &a[k][c];
                        a[r][c] -= t;
                    }
                }
                l[r][k] = lr;
            }
            blocks.push(PivotBlock::One { d });
            k += 1;
            continue;
        }
        let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((i, j)) = off else {
            blocks.extend((k..n).map(|_| PivotBlock::One { d: Rat::zero() }));
            break;
        };
        sym_swap(&mut a, &mut l, &mut perm, k, i);
        // j > i >= k, and j != k unless i == k; after the first swap j is unaffected unless j == k
        let j = if j == k { i } else { j };
        sym_swap(&mut a, &mut l, &mut perm, k + 1, j);
        let (ea, eb, ec) = (a[k][k].clone(), a[k][k + 1].clone(), a[k + 1][k + 1].clone());
        let det = &ea * &ec - &eb * &eb;
        let inv = [
            [&ec / &det, -(&eb / &det)],
            [-(&eb / &det), &ea / &det],
        ];
        for r in k + 2..n {
            let (x, y) = (a[r][k].clone(), a[r][k + 1].clone());
            if x.is_zero() && y.is_zero() {
                continue;
            }
            let l0 = &x * &inv[0][0] + &y * &inv[1][0];
            let l1 = &x * &inv[0][1] + &y * &inv[1][1];
            for c in k + 2..n {
                let t = &l0 * &a[k][c] + &l1 * &a[k + 1][c];
                if !t.is_zero() {
                    a[r][c] -= t;
                }
            }
            l[r][k] = l0;
            l[r][k + 1] = l1;
        }
        blocks.push(PivotBlock::Two { a: ea, b: eb, c: ec });
        k += 2;
    }
    let (n_pos, n_neg, n_zero) = blocks.iter().map(PivotBlock::inertia).fold((0, 0, 0), |a, b| {
        (a.0 + b.0, a.1 + b.1, a.2 + b.2)
    });
    SignatureCert { n_pos, n_neg, n_zero, perm, l, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{int, vec_of};

    fn sm(rows: &[&[i64]]) -> SymMat {
        SymMat::from_rows(&rows.iter().map(|r| vec_of(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn identity_and_diag() {
        let c = ldlt_signature(&SymMat::identity(3));
        assert_eq!((c.n_pos, c.n_neg, c.n_zero), (3, 0, 0));
        let d = SymMat::diag(&[int(2), int(-2)]);
        let c = ldlt_signature(&d);
        assert_eq!((c.n_pos, c.n_neg, c.n_zero), (1, 1, 0));
        assert!(c.verify(&d));
    }

    #[test]
    fn zero_diagonal_needs_two_by_two() {
        let m = sm(&[&[0, 1, 0], &[1, 0, 2], &[0, 2, 0]]);
        let c = ldlt_signature(&m);
        assert!(c.verify(&m));
        assert_eq!((c.n_pos, c.n_neg, c.n_zero), (1, 1, 1));
        let m = sm(&[&[0, 0, 3], &[0, 0, 0], &[3, 0, 0]]);
        let c = ldlt_signature(&m);
        assert!(c.verify(&m));
        assert_eq!((c.n_pos, c.n_neg, c.n_zero), (1, 1, 1));
    }

    #[test]
    fn singular_psd() {
        let m = sm(&[&[1, 1], &[1, 1]]);
        let c = ldlt_signature(&m);
        assert!(c.verify(&m));
        assert_eq!((c.n_pos, c.n_neg, c.n_zero), (1, 0, 1));
        assert!(c.is_psd() && !c.is_pd());
    }

    #[test]
    fn tampered_certificate_fails() {
        let m = sm(&[&[2, 1], &[1, 3]]);
        let mut c = ldlt_signature(&m);
        assert!(c.verify(&m));
        c.n_pos = 1;
        c.n_zero = 1;
        assert!(!c.verify(&m));
    }
}
