//! Robust division `(x, y) ↦ x / max(x, y)`, with any value allowed at `y = 0`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundations::{Dyadic, Rational, RunBudget, SignedDigitStream};

fn check_unit(what: &'static str, q: &Rational) -> Result<()> {
    if q.is_negative() || q > &Rational::one() {
        return Err(Error::range(what, format!("{q} is outside [0,1]")));
    }
    Ok(())
}

/// Exact robust division; the canonical pick at `y = 0` is `0`.
pub fn rdiv(x: &Rational, y: &Rational) -> Result<Rational> {
    check_unit("dividend", x)?;
    check_unit("divisor", y)?;
    if y.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(x / x.max(y))
}

/// Whether `v` is an admissible answer for `(x, y)`.
pub fn rdiv_accepts(x: &Rational, y: &Rational, v: &Rational) -> bool {
    if y.is_zero() {
        !v.is_negative() && v <= &Rational::one()
    } else {
        *v == x / x.max(y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RdivOutcome {
    #[serde(serialize_with = "crate::formats::dyadic_str::serialize")]
    pub value: Dyadic,
    pub mind_changes: u32,
    /// The `n` at which `y > 2^-n` was witnessed.
    pub witness_precision: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RdivResult {
    Settled(RdivOutcome),
    /// Fuel ran out; the outcome is what had been emitted so far.
    Exhausted(RdivOutcome),
}

impl RdivResult {
    pub fn outcome(&self) -> &RdivOutcome {
        match self {
            RdivResult::Settled(o) | RdivResult::Exhausted(o) => o,
        }
    }
}

/// Robust division on signed-digit names with at most one mind change.
///
/// Emits the provisional value `0` until `y > 2^-n` is witnessed from the
/// first `n` digits of `y` (partial sum `> 2^{1-n}`). Then `max(x, y) > 2^-n`,
/// so reading `k + 2n + 4` digits of both determines the quotient to within
/// `2^{-k-2}`; it is clamped to `[0,1]` and rounded to a multiple of
/// `2^{-k-1}`. Fuel bounds the number of digits read from each stream.
pub fn rdiv_stream(x: &mut SignedDigitStream, y: &mut SignedDigitStream, k: u32, fuel: RunBudget) -> RdivResult {
    let provisional = RdivOutcome {
        value: Dyadic::zero(),
        mind_changes: 0,
        witness_precision: None,
    };
    // numerator of the partial sum of y at 2^-n; stays in [-1, 2] until the witness
    let mut m: i64 = 0;
    let mut witness = None;
    for n in 1..=fuel.fuel() as usize {
        m = 2 * m + y.digit(n - 1).value() as i64;
        if m > 2 {
            witness = Some(n);
            break;
        }
    }
    let Some(n) = witness else {
        return RdivResult::Exhausted(provisional);
    };
    let precision = k as usize + 2 * n + 4;
    if precision as u64 > fuel.fuel() {
        return RdivResult::Exhausted(RdivOutcome {
            witness_precision: Some(n),
            ..provisional
        });
    }
    let xa = x.approx(precision).to_rational();
    let ya = y.approx(precision).to_rational();
    let q = (&xa / xa.clone().max(ya)).clamp(Rational::zero(), Rational::one());
    RdivResult::Settled(RdivOutcome {
        value: Dyadic::round_rational(&q, k + 1),
        mind_changes: 1,
        witness_precision: Some(n),
    })
}
