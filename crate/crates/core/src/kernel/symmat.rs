//! Exact symmetric matrices stored as a packed upper triangle.

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::Rat;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SymMat {
    dim: usize,
    upper: Vec<Rat>,
}

impl SymMat {
    pub fn zeros(dim: usize) -> Self {
        SymMat { dim, upper: vec![Rat::zero(); dim * (dim + 1) / 2] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diag(&vec![Rat::one(); dim])
    }

    pub fn diag(d: &[Rat]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Fails unless `rows` is square and symmetric.
    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            for j in i..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Consistency(format!("matrix not symmetric at ({i},{j})")));
                }
                m.set(i, j, rows[i][j].clone());
            }
        }
        Ok(m)
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        assert!(j < self.dim, "index out of range");
        i * (2 * self.dim - i + 1) / 2 + (j - i)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.upper[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        let k = self.idx(i, j);
        self.upper[k] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        SymMat { dim: self.dim, upper: self.upper.iter().map(|v| v * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|v| v.is_zero())
    }

    /// `xᵀ M y`.
    pub fn bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                acc += &x[i] * self.get(i, j) * &y[j];
            }
        }
        acc
    }
}

impl Serialize for SymMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::rat::serde_rat_mat::serialize(&self.to_rows(), s)
    }
}

impl<'de> Deserialize<'de> for SymMat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = super::rat::serde_rat_mat::deserialize(d)?;
        SymMat::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::int;

    #[test]
    fn packed_indexing_covers_triangle() {
        let n = 5;
        let m = SymMat::from_fn(n, |i, j| int((10 * i + j) as i64));
        for i in 0..n {
            for j in i..n {
                assert_eq!(m.get(i, j), &int((10 * i + j) as i64));
                assert_eq!(m.get(j, i), m.get(i, j));
            }
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let rows = vec![vec![int(1), int(2)], vec![int(3), int(1)]];
        assert!(SymMat::from_rows(&rows).is_err());
    }
}
