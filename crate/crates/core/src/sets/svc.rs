//! Smith-Volterra-Cantor intervals.
//!
//! For `ε ∈ [0,1)` and `δ = 1 − ε`, `I_e = [0,1]` and, for `[a,b] = I_w` with
//! `|w| = n − 1`, the children drop a middle piece of length `δ/2^{2n−1}`:
//!
//! ```text
//! I_{w0} = [a, a + (b−a)/2 − δ/2^{2n}]
//! I_{w1} = [a + (b−a)/2 + δ/2^{2n}, b]
//! ```
//!
//! The nested intervals along a path `p` shrink to the single point `f_ε(p)`,
//! and `f_ε` maps the uniform measure on cylinders to Lebesgue measure scaled
//! by `ε`.

use num_bigint::BigInt;
use num_traits::One;

use super::ClosedInterval;
use crate::error::{Error, Result};
use crate::foundations::{pow2_neg, Dyadic, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvcTable {
    epsilon: Dyadic,
    delta: Rational,
}

impl SvcTable {
    pub fn new(epsilon: Dyadic) -> Result<Self> {
        if epsilon.signum() < 0 || epsilon >= Dyadic::one() {
            return Err(Error::range(
                "epsilon",
                format!("{} is outside [0,1)", epsilon.to_rational()),
            ));
        }
        let delta = Rational::one() - epsilon.to_rational();
        Ok(SvcTable { epsilon, delta })
    }

    pub fn epsilon(&self) -> &Dyadic {
        &self.epsilon
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    /// Half the removed middle piece when splitting a node at depth `n − 1`.
    fn half_gap(&self, n: usize) -> Rational {
        &self.delta * pow2_neg(2 * n as u32)
    }

    /// Length of the piece removed between `I_{w0}` and `I_{w1}`, `|w| = depth`.
    pub fn gap(&self, depth: usize) -> Rational {
        &self.delta * pow2_neg(2 * depth as u32 + 1)
    }

    pub fn interval(&self, w: &[bool]) -> ClosedInterval {
        let two = Rational::from_integer(BigInt::from(2));
        let mut lo = Rational::from_integer(0.into());
        let mut hi = Rational::one();
        for (i, &bit) in w.iter().enumerate() {
            let half = (&hi - &lo) / &two;
            let g = self.half_gap(i + 1);
            if bit {
                lo = &lo + &half + g;
            } else {
                hi = &lo + &half - g;
            }
        }
        ClosedInterval { lo, hi }
    }

    /// Common length of every `I_w` with `|w| = n`, by the level recurrence
    /// `L_n = L_{n−1}/2 − δ/2^{2n}`.
    pub fn level_length(&self, n: usize) -> Rational {
        let two = Rational::from_integer(BigInt::from(2));
        (1..=n).fold(Rational::one(), |len, k| len / &two - self.half_gap(k))
    }

    /// `Σ_{|w|=n} length(I_w)`.
    pub fn remaining_length(&self, n: usize) -> Rational {
        self.level_length(n) * Rational::from_integer(BigInt::one() << n)
    }

    /// `Σ_{|v|=depth} length(I_{wv})`; tends to `2^{-|w|}·ε`.
    pub fn remaining_below(&self, w: &[bool], depth: usize) -> Rational {
        self.level_length(w.len() + depth) * Rational::from_integer(BigInt::one() << depth)
    }
}

pub fn svc_interval(w: &[bool], epsilon: &Dyadic) -> Result<ClosedInterval> {
    Ok(SvcTable::new(epsilon.clone())?.interval(w))
}

pub fn svc_remaining_length(epsilon: &Dyadic, n: usize) -> Result<Rational> {
    Ok(SvcTable::new(epsilon.clone())?.remaining_length(n))
}

/// The interval `I_p` pinning `f_ε(p)` for every infinite extension of `p`.
pub fn svc_embed_prefix(p: &[bool], epsilon: &Dyadic) -> Result<ClosedInterval> {
    svc_interval(p, epsilon)
}
