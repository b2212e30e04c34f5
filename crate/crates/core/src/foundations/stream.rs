//! Lazy digit streams naming reals.
//!
//! A [`SignedDigitStream`] with digits `d_n ∈ {-1,0,1}` names
//! `Σ_{n≥0} d_n 2^{-n-1} ∈ [-1,1]`; a length-`n` prefix pins the value to
//! within `2^-n` of its partial sum. A [`BinaryName`] is the same with bits
//! in `{0,1}`, naming a point of `[0,1]`.
//!
//! Streams are single-consumer: digits are produced on demand and cached
//! behind a cursor owned by the stream.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, Dyadic, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Digit {
    Minus,
    Zero,
    Plus,
}

impl Digit {
    pub fn value(self) -> i8 {
        match self {
            Digit::Minus => -1,
            Digit::Zero => 0,
            Digit::Plus => 1,
        }
    }

    pub fn from_value(v: i8) -> Option<Digit> {
        match v {
            -1 => Some(Digit::Minus),
            0 => Some(Digit::Zero),
            1 => Some(Digit::Plus),
            _ => None,
        }
    }
}

type DigitSource = Box<dyn FnMut() -> Digit + Send>;

pub struct SignedDigitStream {
    source: DigitSource,
    cache: Vec<Digit>,
}

impl fmt::Debug for SignedDigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignedDigitStream")
            .field("forced", &self.cache)
            .finish()
    }
}

impl SignedDigitStream {
    /// Stream whose digits are produced, in order, by `next`.
    pub fn from_fn(next: impl FnMut() -> Digit + Send + 'static) -> Self {
        SignedDigitStream {
            source: Box::new(next),
            cache: Vec::new(),
        }
    }

    /// `prefix` followed by `tail` repeated forever.
    pub fn from_digits(prefix: Vec<Digit>, tail: Digit) -> Self {
        let mut i = 0;
        Self::from_fn(move || {
            let d = prefix.get(i).copied().unwrap_or(tail);
            i += 1;
            d
        })
    }

    pub fn zero() -> Self {
        Self::from_digits(Vec::new(), Digit::Zero)
    }

    /// Exact expansion of a rational in `[-1,1]`.
    ///
    /// Greedy: with remainder `r`, emit `1` if `r ≥ 1/2`, `-1` if `r ≤ -1/2`,
    /// else `0`, and continue with `2r - d`. The remainder stays in `[-1,1]`.
    pub fn from_rational(q: &Rational) -> Result<Self> {
        let one = Rational::one();
        if q > &one || q < &-one.clone() {
            return Err(Error::range("signed-digit value", format!("{q} is outside [-1,1]")));
        }
        let half = rat(1, 2);
        let mut r = q.clone();
        Ok(Self::from_fn(move || {
            let d = if r >= half {
                Digit::Plus
            } else if r <= -half.clone() {
                Digit::Minus
            } else {
                Digit::Zero
            };
            r = &r * BigInt::from(2) - Rational::from_integer(BigInt::from(d.value()));
            d
        }))
    }

    fn force(&mut self, n: usize) {
        while self.cache.len() < n {
            let d = (self.source)();
            self.cache.push(d);
        }
    }

    pub fn digit(&mut self, n: usize) -> Digit {
        self.force(n + 1);
        self.cache[n]
    }

    pub fn prefix(&mut self, n: usize) -> &[Digit] {
        self.force(n);
        &self.cache[..n]
    }

    /// `Σ_{i<n} d_i 2^{-i-1}`; the named value is within `2^-n` of it.
    pub fn approx(&mut self, n: usize) -> Dyadic {
        let mut m = BigInt::zero();
        for d in self.prefix(n) {
            m = (m << 1usize) + BigInt::from(d.value());
        }
        Dyadic::new(m, n as i64)
    }
}

/// See [`SignedDigitStream::approx`].
pub fn sds_approx(s: &mut SignedDigitStream, n: usize) -> Dyadic {
    s.approx(n)
}

/// See [`SignedDigitStream::from_rational`].
pub fn sds_from_rational(q: &Rational) -> Result<SignedDigitStream> {
    SignedDigitStream::from_rational(q)
}

/// A binary name `p ∈ {0,1}^ℕ` of `Σ p(i) 2^{-i-1} ∈ [0,1]`.
pub struct BinaryName {
    source: Box<dyn FnMut() -> bool + Send>,
    cache: Vec<bool>,
}

impl fmt::Debug for BinaryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryName").field("forced", &self.cache.len()).finish()
    }
}

impl BinaryName {
    pub fn from_fn(next: impl FnMut() -> bool + Send + 'static) -> Self {
        BinaryName {
            source: Box::new(next),
            cache: Vec::new(),
        }
    }

    pub fn from_bits(prefix: Vec<bool>, tail: bool) -> Self {
        let mut i = 0;
        Self::from_fn(move || {
            let b = prefix.get(i).copied().unwrap_or(tail);
            i += 1;
            b
        })
    }

    /// Standard binary expansion of `q ∈ [0,1]` (`1` is named by `111…`).
    pub fn from_rational(q: &Rational) -> Result<Self> {
        if q.is_negative() || q > &Rational::one() {
            return Err(Error::range("binary value", format!("{q} is outside [0,1]")));
        }
        if q.is_one() {
            return Ok(Self::from_bits(Vec::new(), true));
        }
        let half = rat(1, 2);
        let mut r = q.clone();
        Ok(Self::from_fn(move || {
            let b = r >= half;
            r = &r * BigInt::from(2) - if b { Rational::one() } else { Rational::zero() };
            b
        }))
    }

    pub fn bit(&mut self, n: usize) -> bool {
        self.prefix(n + 1)[n]
    }

    pub fn prefix(&mut self, n: usize) -> &[bool] {
        while self.cache.len() < n {
            let b = (self.source)();
            self.cache.push(b);
        }
        &self.cache[..n]
    }

    /// The closed interval of all values whose names start with the first `n` bits.
    pub fn cylinder(&mut self, n: usize) -> (Dyadic, Dyadic) {
        binary_cylinder(self.prefix(n))
    }
}

/// `[Σ w_i 2^{-i-1}, that + 2^{-|w|}]`.
pub fn binary_cylinder(w: &[bool]) -> (Dyadic, Dyadic) {
    let mut m = BigInt::zero();
    for &b in w {
        m = (m << 1usize) + if b { BigInt::one() } else { BigInt::zero() };
    }
    let lo = Dyadic::new(m, w.len() as i64);
    let hi = &lo + &Dyadic::pow2_neg(w.len() as i64);
    (lo, hi)
}
