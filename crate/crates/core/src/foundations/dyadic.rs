//! Exact dyadic rationals `m · 2^-e`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A dyadic rational `mantissa · 2^-exponent`.
///
/// Values are kept normalized: the mantissa is odd, or zero with exponent 0.
/// Derived equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        Self::normalized(mantissa.into(), exponent)
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0)
    }

    /// `2^-n`.
    pub fn pow2_neg(n: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: n,
        }
    }

    fn normalized(mut mantissa: BigInt, mut exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            mantissa >>= tz;
            exponent -= tz as i64;
        }
        Dyadic { mantissa, exponent }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mantissa.is_positive() {
            1
        } else if self.mantissa.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Mantissas of both operands brought to the common exponent.
    fn aligned(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let e = self.exponent.max(other.exponent);
        let a = &self.mantissa << ((e - self.exponent) as usize);
        let b = &other.mantissa << ((e - other.exponent) as usize);
        (a, b, e)
    }

    /// Multiply by `2^k` (k may be negative).
    pub fn shl(&self, k: i64) -> Self {
        Self::normalized(self.mantissa.clone(), self.exponent - k)
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::new(self.mantissa.clone(), BigInt::one() << (self.exponent as usize))
        } else {
            Rational::from_integer(&self.mantissa << ((-self.exponent) as usize))
        }
    }

    /// Largest multiple of `2^-precision` that is `<= q`.
    pub fn floor_rational(q: &Rational, precision: u32) -> Self {
        let scaled = q * Rational::from_integer(BigInt::one() << precision as usize);
        Self::new(scaled.floor().to_integer(), precision as i64)
    }

    /// Smallest multiple of `2^-precision` that is `>= q`.
    pub fn ceil_rational(q: &Rational, precision: u32) -> Self {
        let scaled = q * Rational::from_integer(BigInt::one() << precision as usize);
        Self::new(scaled.ceil().to_integer(), precision as i64)
    }

    /// Nearest multiple of `2^-precision` (ties toward +inf); error at most `2^-(precision+1)`.
    pub fn round_rational(q: &Rational, precision: u32) -> Self {
        let scaled = q * Rational::from_integer(BigInt::one() << precision as usize);
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        Self::new((scaled + half).floor().to_integer(), precision as i64)
    }

    /// Exact midpoint.
    pub fn midpoint(&self, other: &Self) -> Self {
        (self + other).shl(-1)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &'a Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::normalized(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &'a Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::normalized(a - b, e)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &'a Dyadic) -> Dyadic {
        Dyadic::normalized(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: &'a Dyadic) -> Dyadic {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -(self.clone())
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl TryFrom<&Rational> for Dyadic {
    type Error = Error;

    fn try_from(q: &Rational) -> Result<Self> {
        let den = q.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz as usize).is_one() {
            Ok(Dyadic::new(q.numer().clone(), tz as i64))
        } else {
            Err(Error::range(
                "dyadic",
                format!("{q} has a non-power-of-two denominator"),
            ))
        }
    }
}

/// Serialized as `m*2^-e`.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent >= 0 {
            write!(f, "{}*2^-{}", self.mantissa, self.exponent)
        } else {
            write!(f, "{}*2^-0", &self.mantissa << ((-self.exponent) as usize))
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self} = {})", self.to_rational())
    }
}

/// Parses `m*2^-e`, or a plain integer / `p/q` with power-of-two `q`.
impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((m, e)) = s.split_once("*2^") {
            let mantissa: BigInt = m.trim().parse().map_err(|_| Error::parse("dyadic", s))?;
            let exp: i64 = e.trim().parse().map_err(|_| Error::parse("dyadic", s))?;
            return Ok(Dyadic::new(mantissa, -exp));
        }
        let q = super::parse_rational(s).map_err(|_| Error::parse("dyadic", s))?;
        Dyadic::try_from(&q)
    }
}
