//! Monte Carlo estimation of the success measure.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{lv_run, LasVegasMachine, RunOutcome};
use crate::error::Result;
use crate::formats::rational_str;
use crate::foundations::{advice_sample, AdviceSeed, Dyadic, Rational, RunBudget};

/// `z` for a two-sided 99% normal interval.
pub fn wilson_z() -> Rational {
    Rational::new(BigInt::from(2_575_830), BigInt::from(1_000_000))
}

fn sqrt_upper(q: &Rational) -> Rational {
    let scale = BigInt::one() << 128usize;
    let scaled = (q * Rational::from_integer(scale)).ceil().to_integer();
    Rational::new(scaled.sqrt() + BigInt::one(), BigInt::one() << 64usize)
}

/// Wilson score interval for `successes` out of `n` at confidence given by
/// `z`, widened outward to multiples of `2^-40` and clamped to `[0,1]`.
pub fn wilson_interval(successes: u64, n: u64, z: &Rational) -> (Rational, Rational) {
    if n == 0 {
        return (Rational::zero(), Rational::one());
    }
    let nn = Rational::from_integer(BigInt::from(n));
    let p = Rational::new(BigInt::from(successes), BigInt::from(n));
    let z2 = z * z;
    let denom = Rational::one() + &z2 / &nn;
    let center = (&p + &z2 / (&nn * BigInt::from(2))) / &denom;
    let radicand = &p * (Rational::one() - &p) / &nn + &z2 / (&nn * &nn * BigInt::from(4));
    let half = z * sqrt_upper(&radicand) / &denom;
    let lo = Dyadic::floor_rational(&(&center - &half), 40)
        .to_rational()
        .max(Rational::zero());
    let hi = Dyadic::ceil_rational(&(&center + &half), 40)
        .to_rational()
        .min(Rational::one());
    (lo, hi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuccessEstimate {
    pub trials: u64,
    pub succeeded: u64,
    pub failed: u64,
    pub exhausted: u64,
    /// `succeeded / (trials − exhausted)`; absent when every trial exhausted.
    #[serde(serialize_with = "opt_rational")]
    pub estimate: Option<Rational>,
    /// `succeeded / trials`, counting exhausted runs as unsuccessful.
    #[serde(with = "rational_str")]
    pub estimate_all_trials: Rational,
    #[serde(with = "rational_str")]
    pub wilson_lo: Rational,
    #[serde(with = "rational_str")]
    pub wilson_hi: Rational,
}

fn opt_rational<S: serde::Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

impl SuccessEstimate {
    pub fn from_counts(succeeded: u64, failed: u64, exhausted: u64) -> Self {
        let trials = succeeded + failed + exhausted;
        let decided = trials - exhausted;
        let estimate = (decided > 0).then(|| Rational::new(BigInt::from(succeeded), BigInt::from(decided)));
        let estimate_all_trials = if trials == 0 {
            Rational::zero()
        } else {
            Rational::new(BigInt::from(succeeded), BigInt::from(trials))
        };
        let (wilson_lo, wilson_hi) = wilson_interval(succeeded, decided, &wilson_z());
        SuccessEstimate {
            trials,
            succeeded,
            failed,
            exhausted,
            estimate,
            estimate_all_trials,
            wilson_lo,
            wilson_hi,
        }
    }

    pub fn estimate_f64(&self) -> Option<f64> {
        use num_traits::ToPrimitive;
        self.estimate.as_ref().and_then(ToPrimitive::to_f64)
    }
}

/// Runs trial `i` with advice `seed.split(i)`, in parallel.
pub fn lv_estimate_success<M>(
    machine: &M,
    input: &M::Input,
    trials: u64,
    seed: AdviceSeed,
    fuel: RunBudget,
    out_len: usize,
) -> Result<SuccessEstimate>
where
    M: LasVegasMachine + ?Sized,
    M::Input: Sync,
{
    let space = machine.advice_space();
    advice_sample(&space, seed)?;
    let (s, f, e) = (0..trials)
        .into_par_iter()
        .map(|i| {
            let advice = advice_sample(&space, seed.split(i)).expect("samplable space");
            match lv_run(machine, input.clone(), advice.raw(), out_len, fuel) {
                RunOutcome::Succeeding { .. } => (1, 0, 0),
                RunOutcome::Failed { .. } => (0, 1, 0),
                RunOutcome::Exhausted { .. } => (0, 0, 1),
            }
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    Ok(SuccessEstimate::from_counts(s, f, e))
}
