//! Gaussian rationals `re + im·i` with exact arithmetic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n / d` as a real scalar. Panics on `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn i() -> Self {
        Scalar::gaussian(0, 1)
    }

    /// `i^k` for any integer exponent.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Scalar::int(1),
            1 => Scalar::gaussian(0, 1),
            2 => Scalar::int(-1),
            _ => Scalar::gaussian(0, -1),
        }
    }

    /// `(-1)^k`.
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Scalar::int(1)
        } else {
            Scalar::int(-1)
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Scalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    /// Sign of a real scalar: -1, 0 or 1. `None` if the imaginary part is nonzero.
    pub fn real_sign(&self) -> Option<i8> {
        if !self.is_real() {
            return None;
        }
        Some(if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::real(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::int(-1));
        assert_eq!(Scalar::i_pow(-1), Scalar::gaussian(0, -1));
        assert_eq!(Scalar::i_pow(6), Scalar::int(-1));
    }

    #[test]
    fn conjugation_fixes_exactly_reals() {
        let z = Scalar::gaussian(3, -2);
        assert_ne!(z.conj(), z);
        assert_eq!(Scalar::frac(3, 7).conj(), Scalar::frac(3, 7));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn division_round_trips() {
        let a = Scalar::gaussian(1, 2);
        let b = Scalar::gaussian(-3, 5);
        assert_eq!(&(&a / &b) * &b, a);
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::gaussian(1, -1).to_string(), "1-1i");
        assert_eq!(Scalar::frac(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::gaussian(0, 2).to_string(), "2i");
    }
}
