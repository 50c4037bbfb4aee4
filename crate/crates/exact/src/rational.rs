//! Exact rational numbers with an inline fast path.
//!
//! Values that fit in `i64` numerator/denominator are stored inline;
//! anything larger promotes to a heap-allocated `BigRational`. All
//! arithmetic is exact, and the representation is canonical: lowest
//! terms, positive denominator, and big values demote back to the
//! inline form whenever they fit, so `Eq`/`Hash`/`Ord` can be structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::ExactError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    /// Reduced, denominator > 0.
    Small(i64, i64),
    /// Reduced by `BigRational`; numerator or denominator exceeds `i64`.
    Big(Box<BigRational>),
}

/// An exact rational number (arbitrary precision).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// Construct `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        if num == 0 {
            return Self::zero();
        }
        let g = gcd_i128(num, den);
        num /= g;
        den /= g;
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    pub fn from_big(b: BigRational) -> Self {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(b))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn add(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    pub fn sub(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d - c * b, b * d)
            }
            _ => Self::from_big(self.to_big() - rhs.to_big()),
        }
    }

    pub fn mul(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * c, b * d)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    pub fn neg(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    pub fn inv(&self) -> Result<Rational, ExactError> {
        match &self.0 {
            Repr::Small(0, _) => Err(ExactError::DivisionByZero),
            Repr::Small(n, d) => {
                if *n < 0 {
                    Ok(Self::from_i128(-(*d as i128), -(*n as i128)))
                } else {
                    Ok(Self::from_i128(*d as i128, *n as i128))
                }
            }
            Repr::Big(b) => Ok(Self::from_big(b.recip())),
        }
    }

    pub fn div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Parses `p`, `p/q`, or `-p/q` with arbitrary-precision parts.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ExactError::Parse(format!("invalid rational `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::from(1)),
        };
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(1, -2), Rational::new(-1, 2));
        assert_eq!(Rational::new(-3, -6), Rational::new(1, 2));
        assert_eq!(Rational::new(0, 5), Rational::zero());
    }

    #[test]
    fn overflow_promotes_and_stays_exact() {
        let big = Rational::from_int(i64::MAX);
        let sq = big.mul(&big);
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
        assert_eq!(sq.sub(&sq), Rational::zero());
    }

    #[test]
    fn inv_of_zero_is_error() {
        assert!(Rational::zero().inv().is_err());
        assert_eq!(
            Rational::new(-2, 3).inv().unwrap(),
            Rational::new(-3, 2)
        );
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-7", "3/4", "-12/8", "170141183460469231731687303715884105727/3"] {
            let r: Rational = s.parse().unwrap();
            let again: Rational = r.to_string().parse().unwrap();
            assert_eq!(r, again);
        }
    }
}
