//! Dyadic rationals: exact numbers of the form `n / 2^k`.
//!
//! Every edge weight that appears in the Tait-graph constructions is a
//! signed power of two (`±1`, `±1/2`, `±2`), and the set of dyadic
//! rationals is closed under the ring operations, so the Laplacian and its
//! determinant never leave this type.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An exact value `numerator / 2^exponent`, always kept normalized: the
/// numerator is odd, or the value is zero and the exponent is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseDyadicError {
    #[error("empty number")]
    Empty,
    #[error("invalid integer `{0}`")]
    InvalidInteger(String),
    #[error("denominator {0} is not a positive power of two")]
    NotDyadic(String),
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut d = Dyadic {
            numerator: numerator.into(),
            exponent,
        };
        d.normalize();
        d
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0)
    }

    pub fn zero() -> Self {
        Dyadic {
            numerator: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `±2^k` for any integer `k`.
    pub fn pow2(k: i32) -> Self {
        if k >= 0 {
            Dyadic::from_integer(BigInt::one() << k as usize)
        } else {
            Dyadic::new(1, k.unsigned_abs())
        }
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0);
        let shift = tz.min(self.exponent as u64) as u32;
        if shift > 0 {
            self.numerator >>= shift as usize;
            self.exponent -= shift;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numerator.clone())
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            numerator: self.numerator.abs(),
            exponent: self.exponent,
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.numerator.is_zero() {
            0
        } else if self.numerator.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn half(&self) -> Self {
        Dyadic::new(self.numerator.clone(), self.exponent + 1)
    }

    pub fn double(&self) -> Self {
        self.scale_pow2(1)
    }

    /// Multiply by `2^k`.
    pub fn scale_pow2(&self, k: i32) -> Self {
        if k >= 0 {
            let k = k as u32;
            if k <= self.exponent {
                Dyadic::new(self.numerator.clone(), self.exponent - k)
            } else {
                Dyadic::new(self.numerator.clone() << (k - self.exponent) as usize, 0)
            }
        } else {
            Dyadic::new(self.numerator.clone(), self.exponent + k.unsigned_abs())
        }
    }

    /// The numerator rescaled to a common exponent `e >= self.exponent`.
    pub(crate) fn numerator_at(&self, e: u32) -> BigInt {
        debug_assert!(e >= self.exponent);
        &self.numerator << (e - self.exponent) as usize
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_integer(n)
    }
}

impl From<i32> for Dyadic {
    fn from(n: i32) -> Self {
        Dyadic::from_integer(n)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::from_integer(n)
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exponent.max(rhs.exponent);
        Dyadic::new(self.numerator_at(e) + rhs.numerator_at(e), e)
    }
}

impl Sub<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exponent.max(rhs.exponent);
        Dyadic::new(self.numerator_at(e) - rhs.numerator_at(e), e)
    }
}

impl Mul<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(
            &self.numerator * &rhs.numerator,
            self.exponent + rhs.exponent,
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: Dyadic) -> Dyadic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: &Dyadic) -> Dyadic {
                (&self).$f(rhs)
            }
        }
        impl $tr<Dyadic> for &Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: Dyadic) -> Dyadic {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Dyadic> for Dyadic {
    fn sub_assign(&mut self, rhs: &Dyadic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Dyadic> for Dyadic {
    fn mul_assign(&mut self, rhs: &Dyadic) {
        *self = &*self * rhs;
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -self.clone()
    }
}

impl std::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Dyadic {
    fn product<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::one(), |acc, x| acc * x)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.numerator_at(e).cmp(&other.numerator_at(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(
                f,
                "{}/{}",
                self.numerator,
                BigInt::one() << self.exponent as usize
            )
        }
    }
}

/// Accepts integers and fractions whose denominator is a power of two,
/// e.g. `3`, `-1/2`, `5/8`. A leading U+2212 minus sign is accepted too.
impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseDyadicError::Empty);
        }
        let (negative, body) = if let Some(rest) = s.strip_prefix('\u{2212}') {
            (true, rest)
        } else {
            (false, s)
        };
        let int = |t: &str| -> Result<BigInt, ParseDyadicError> {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| ParseDyadicError::InvalidInteger(t.to_string()))
        };
        let value = match body.split_once('/') {
            None => Dyadic::from_integer(int(body)?),
            Some((n, d)) => {
                let num = int(n)?;
                let den = int(d)?;
                if !den.is_positive() || den.magnitude().count_ones() != 1 {
                    return Err(ParseDyadicError::NotDyadic(d.trim().to_string()));
                }
                let k = den.trailing_zeros().unwrap_or(0);
                if k > u32::MAX as u64 {
                    return Err(ParseDyadicError::NotDyadic(d.trim().to_string()));
                }
                Dyadic::new(num, k as u32)
            }
        };
        Ok(if negative { -value } else { value })
    }
}
