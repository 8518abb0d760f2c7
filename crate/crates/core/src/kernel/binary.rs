//! Homogeneous forms in `(s, t)`.
//!
//! As an [`MPoly`] a binary form uses `x0 = s` and `x1 = t`.

use num_traits::Zero;

use super::mpoly::{MPoly, Monomial};
use super::rat::Rat;
use super::upoly::UPoly;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct BinaryForm {
    degree: usize,
    /// `coeffs[i]` multiplies `s^(d-i) t^i`.
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(degree: usize, mut coeffs: Vec<Rat>) -> Self {
        assert!(coeffs.len() <= degree + 1, "too many coefficients for degree {degree}");
        coeffs.resize(degree + 1, Rat::zero());
        BinaryForm { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(degree, vec![])
    }

    /// Reads a form of the given degree from a polynomial in `x0 = s`, `x1 = t`.
    pub fn from_mpoly(p: &MPoly, degree: usize) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: p.nvars() });
        }
        if !p.is_zero() && p.degree() != degree as i64 {
            return Err(Error::WrongDegree { expected: degree, got: p.degree() });
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mut coeffs = vec![Rat::zero(); degree + 1];
        for (m, c) in p.terms() {
            coeffs[m.0[1] as usize] = c.clone();
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        Self::from_mpoly(&MPoly::parse(s, 2)?, degree)
    }

    pub fn to_mpoly(&self) -> MPoly {
        let d = self.degree as u32;
        MPoly::from_terms(
            2,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![d - i as u32, i as u32], c.clone())),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `p(s = 1, t)` as a polynomial in `t`.
    pub fn dehomogenize(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    /// Multiplies by `s^(d - deg)` so the form has degree `d`.
    pub fn padded(&self, d: usize) -> Result<Self> {
        if d < self.degree {
            return Err(Error::DegreeMismatch(self.degree, d));
        }
        Ok(Self::new(d, self.coeffs.clone()))
    }

    /// Multiplicity of the root `(s:t) = (0:1)`, i.e. the power of `s` dividing the form.
    pub fn root_at_infinity(&self) -> usize {
        if self.is_zero() {
            return self.degree;
        }
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        self.to_mpoly().eval(&[s.clone(), t.clone()])
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.degree, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `a·self + b·other`; both must have the same degree.
    pub fn combine(&self, a: &Rat, other: &BinaryForm, b: &Rat) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(Self::new(
            self.degree,
            self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| a * x + b * y).collect(),
        ))
    }

    /// `Σ weights[i]·forms[i]` over forms of one common degree.
    pub fn linear_combination(weights: &[Rat], forms: &[BinaryForm]) -> Result<Self> {
        let d = forms.first().map(|f| f.degree).unwrap_or(0);
        let mut acc = Self::zero(d);
        for (w, f) in weights.iter().zip(forms) {
            acc = acc.combine(&Rat::from_integer(1.into()), f, w)?;
        }
        Ok(acc)
    }

    /// Substitutes `(s, t) ↦ (a s + b t, c s + d t)`.
    pub fn reparametrize(&self, m: [[Rat; 2]; 2]) -> Self {
        let [[a, b], [c, d]] = m;
        let subs = [
            MPoly::from_terms(2, [(vec![1, 0], a), (vec![0, 1], b)]),
            MPoly::from_terms(2, [(vec![1, 0], c), (vec![0, 1], d)]),
        ];
        let p = self.to_mpoly().substitute(&subs).expect("two variables");
        Self::from_mpoly(&p, self.degree).expect("degree is preserved")
    }

    pub fn monomial_term(&self, i: usize) -> Monomial {
        Monomial(vec![(self.degree - i) as u32, i as u32])
    }
}

impl std::fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_mpoly())
    }
}

/// Serialized as the polynomial text in `x0 = s`, `x1 = t`.
impl serde::Serialize for BinaryForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_mpoly().to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{int, vec_of};

    #[test]
    fn padding_keeps_dehomogenization() {
        let p = BinaryForm::parse("x1^4 + 3*x0*x1^3", 4).unwrap();
        let q = p.padded(5).unwrap();
        assert_eq!(q.degree(), 5);
        assert_eq!(q.dehomogenize(), p.dehomogenize());
        assert_eq!(q.root_at_infinity(), 1);
        assert_eq!(q.to_mpoly(), MPoly::parse("x0*x1^4 + 3*x0^2*x1^3", 2).unwrap());
    }

    #[test]
    fn degree_checks() {
        assert!(BinaryForm::parse("x0^2 + x1", 2).is_err());
        assert!(BinaryForm::parse("x0^3", 2).is_err());
        let p = BinaryForm::new(2, vec_of(&[1, 0, -1]));
        assert_eq!(p.eval(&int(1), &int(1)), int(0));
    }

    #[test]
    fn reparametrize_identity() {
        let p = BinaryForm::new(3, vec_of(&[1, -2, 0, 5]));
        assert_eq!(p.reparametrize([[int(1), int(0)], [int(0), int(1)]]), p);
    }
}
