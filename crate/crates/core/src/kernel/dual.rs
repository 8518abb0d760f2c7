//! Dual numbers `re + eps·ε` with `ε² = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{fmt_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DualRat {
    pub re: Rat,
    pub eps: Rat,
}

impl DualRat {
    pub fn new(re: Rat, eps: Rat) -> Self {
        DualRat { re, eps }
    }

    pub fn real(re: Rat) -> Self {
        DualRat { re, eps: Rat::zero() }
    }

    /// The pure infinitesimal `b·ε`.
    pub fn infinitesimal(eps: Rat) -> Self {
        DualRat { re: Rat::zero(), eps }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        DualRat { re: &self.re * c, eps: &self.eps * c }
    }

    /// Inverse of a unit; `None` when the real part vanishes.
    pub fn inv(&self) -> Option<Self> {
        if self.re.is_zero() {
            return None;
        }
        let r = self.re.recip();
        let e = -(&self.eps * &r * &r);
        Some(DualRat { re: r, eps: e })
    }
}

impl fmt::Display for DualRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*eps", fmt_rat(&self.re), fmt_rat(&self.eps))
    }
}

impl<'a> Add<&'a DualRat> for &'a DualRat {
    type Output = DualRat;
    fn add(self, o: &DualRat) -> DualRat {
        DualRat { re: &self.re + &o.re, eps: &self.eps + &o.eps }
    }
}

impl<'a> Sub<&'a DualRat> for &'a DualRat {
    type Output = DualRat;
    fn sub(self, o: &DualRat) -> DualRat {
        DualRat { re: &self.re - &o.re, eps: &self.eps - &o.eps }
    }
}

impl<'a> Mul<&'a DualRat> for &'a DualRat {
    type Output = DualRat;
    fn mul(self, o: &DualRat) -> DualRat {
        DualRat {
            re: &self.re * &o.re,
            eps: &self.re * &o.eps + &self.eps * &o.re,
        }
    }
}

impl Neg for &DualRat {
    type Output = DualRat;
    fn neg(self) -> DualRat {
        DualRat { re: -&self.re, eps: -&self.eps }
    }
}

impl Add for DualRat {
    type Output = DualRat;
    fn add(self, o: DualRat) -> DualRat {
        &self + &o
    }
}

impl Sub for DualRat {
    type Output = DualRat;
    fn sub(self, o: DualRat) -> DualRat {
        &self - &o
    }
}

impl Mul for DualRat {
    type Output = DualRat;
    fn mul(self, o: DualRat) -> DualRat {
        &self * &o
    }
}

impl Neg for DualRat {
    type Output = DualRat;
    fn neg(self) -> DualRat {
        -&self
    }
}

impl Zero for DualRat {
    fn zero() -> Self {
        DualRat::real(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }
}

impl One for DualRat {
    fn one() -> Self {
        DualRat::real(Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{int, rat};

    #[test]
    fn product_rule() {
        let a = DualRat::new(int(2), int(3));
        let b = DualRat::new(rat(1, 2), int(-5));
        let p = &a * &b;
        assert_eq!(p.re, int(1));
        assert_eq!(p.eps, int(-10) + rat(3, 2));
    }

    #[test]
    fn infinitesimals_square_to_zero() {
        let a = DualRat::infinitesimal(int(7));
        let b = DualRat::infinitesimal(rat(-2, 3));
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn unit_inverse() {
        let a = DualRat::new(int(4), int(1));
        assert_eq!(&a * &a.inv().unwrap(), DualRat::one());
        assert!(DualRat::infinitesimal(int(1)).inv().is_none());
    }
}
