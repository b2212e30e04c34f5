//! Encoding finite choice `C_{a,b}` as closed subsets of `[0,1]` of large measure.
//!
//! `[0,1]` is cut into `b` closed intervals `I_0 < … < I_{b−1}` of common
//! length `l`, with `ε/a < l < 1/b`, separated by equal gaps. A set
//! `C ⊆ {0,…,b−1}` with `|C| ≥ a` becomes `A_C = ⋃_{i∈C} I_i`, of measure
//! `|C|·l > ε`; any point of `A_C` decodes back to an element of `C`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::foundations::{rat, Rational};
use crate::sets::{ClosedInterval, NegClosedUnit, OpenInterval};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCode {
    pub a: u64,
    pub b: u64,
    pub epsilon: Rational,
    pub length: Rational,
    pub gap: Rational,
}

impl IntervalCode {
    pub fn new(a: u64, b: u64, epsilon: Rational) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::Precondition(format!("need 0 < a < b, got a={a}, b={b}")));
        }
        if epsilon.is_negative() {
            return Err(Error::Precondition(format!("epsilon {epsilon} is negative")));
        }
        let lower = &epsilon / BigInt::from(a);
        let upper = Rational::new(BigInt::one(), BigInt::from(b));
        if lower >= upper {
            return Err(Error::Precondition(format!(
                "need epsilon/a < 1/b, got {lower} >= {upper}"
            )));
        }
        let length = (lower + &upper) / BigInt::from(2);
        let gap = (Rational::one() - &length * BigInt::from(b)) / BigInt::from(b - 1);
        Ok(IntervalCode {
            a,
            b,
            epsilon,
            length,
            gap,
        })
    }

    pub fn interval(&self, i: u64) -> ClosedInterval {
        let lo = (&self.length + &self.gap) * BigInt::from(i);
        let hi = &lo + &self.length;
        ClosedInterval { lo, hi }
    }

    /// `λ(A_C)` for a set of the given size.
    pub fn measure_of(&self, size: usize) -> Rational {
        &self.length * BigInt::from(size)
    }

    /// The name of `A_C` listing the open gaps around the chosen intervals.
    pub fn encode(&self, c: &BTreeSet<u64>) -> Result<NegClosedUnit> {
        if let Some(&bad) = c.iter().find(|&&i| i >= self.b) {
            return Err(Error::Precondition(format!("{bad} is not below b={}", self.b)));
        }
        if (c.len() as u64) < self.a {
            return Err(Error::Precondition(format!("|C|={} is below a={}", c.len(), self.a)));
        }
        let mut removed = Vec::new();
        let mut left = rat(-1, 1);
        for &i in c {
            let iv = self.interval(i);
            if left < iv.lo {
                removed.push(OpenInterval::new(left, iv.lo.clone())?);
            }
            left = iv.hi;
        }
        if left < Rational::one() {
            removed.push(OpenInterval::new(left, rat(2, 1))?);
        }
        Ok(NegClosedUnit::from_intervals(removed))
    }

    /// The index of the interval containing `x`.
    pub fn decode(&self, x: &Rational) -> Result<u64> {
        if x.is_negative() || x > &Rational::one() {
            return Err(Error::range("code point", format!("{x} is outside [0,1]")));
        }
        let i = (x / (&self.length + &self.gap)).floor().to_integer();
        let i: u64 = i.try_into().map_err(|_| Error::range("code point", x.to_string()))?;
        let i = i.min(self.b - 1);
        if self.interval(i).contains(x) {
            Ok(i)
        } else {
            Err(Error::range("code point", format!("{x} lies in a gap")))
        }
    }
}

pub fn interval_encode(c: &BTreeSet<u64>, a: u64, b: u64, epsilon: Rational) -> Result<(IntervalCode, NegClosedUnit)> {
    let code = IntervalCode::new(a, b, epsilon)?;
    let name = code.encode(c)?;
    Ok((code, name))
}

pub fn interval_decode(code: &IntervalCode, x: &Rational) -> Result<u64> {
    code.decode(x)
}
