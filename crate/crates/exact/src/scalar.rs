//! Gaussian rationals: the coefficient field for everything downstream.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::{ExactError, Rational};

/// An exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(Rational::from_int(n), Rational::zero())
    }

    /// `n·i` for integer `n`.
    pub fn int_i(n: i64) -> Self {
        Self::new(Rational::zero(), Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    /// Multiplicative inverse; error when `self` is zero.
    pub fn inv(&self) -> Result<Self, ExactError> {
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        if norm.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let ninv = norm.inv()?;
        Ok(Self::new(self.re.mul(&ninv), self.im.neg().mul(&ninv)))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.re.mul(r), self.im.mul(r))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(self.re.neg(), self.im.neg())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re = self.re.add(&rhs.re);
        self.im = self.im.add(&rhs.im);
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn im_part(im: &Rational) -> String {
            if im.is_one() {
                "i".to_string()
            } else if *im == Rational::from_int(-1) {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        }
        if self.is_zero() {
            write!(f, "0")
        } else if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", im_part(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, im_part(&self.im))
        } else {
            write!(f, "{}+{}", self.re, im_part(&self.im))
        }
    }
}

/// Canonical encoding: both parts as `"num/den"` strings in lowest terms.
fn rational_to_canonical(r: &Rational) -> String {
    let b = r.to_big();
    format!("{}/{}", b.numer(), b.denom())
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("GaussianRational", 2)?;
        s.serialize_field("re", &rational_to_canonical(&self.re))?;
        s.serialize_field("im", &rational_to_canonical(&self.im))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Parts {
            re: String,
            im: String,
        }
        let p = Parts::deserialize(deserializer)?;
        let re: Rational = p.re.parse().map_err(D::Error::custom)?;
        let im: Rational = p.im.parse().map_err(D::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}
