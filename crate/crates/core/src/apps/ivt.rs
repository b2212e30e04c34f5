//! Zeros of functions with a sign change.
//!
//! Trisection keeps `[a,b]` with `f(a)·f(b) < 0` and probes the two inner
//! thirds. A probe value is only trusted once `|f(c)| > 2^-n` is witnessed,
//! with `n = 1, 2, …` dovetailed over both probes; a probe sitting on a zero
//! is never witnessed, so a function vanishing on an interval may stall the
//! search for good.
//!
//! The probabilistic variant draws a bit `b` and a point `x`. For `b = 1` it
//! trisects and ignores `x`. For `b = 0` it bets that the zero set contains an
//! interval and outputs `x`, failing as soon as `f` is seen to be nonzero on
//! a binary cylinder around `x`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::engine::{LasVegasMachine, Process};
use crate::error::{Error, Result};
use crate::foundations::{binary_cylinder, pow2_neg, AdviceBits, AdviceSpace, Dyadic, Rational, RunBudget};
use crate::sets::ClosedInterval;

use super::PwlFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrisectOutcome {
    Zero(Dyadic),
    Stalled(ClosedInterval),
}

/// Trisection state, advanced one dovetail round at a time.
#[derive(Debug, Clone)]
pub struct Trisection {
    pub interval: ClosedInterval,
    /// Sign of `f` at the left end; the right end has the opposite sign.
    left_sign: bool,
    round: u32,
    pub shrinks: u32,
}

impl Trisection {
    pub fn new(f: &PwlFunction) -> Result<Self> {
        if !f.has_sign_change() {
            return Err(Error::Precondition("f(0) and f(1) must have opposite signs".into()));
        }
        let left_sign = f.eval_unchecked(&Rational::zero()).is_positive();
        Ok(Trisection {
            interval: ClosedInterval::unit(),
            left_sign,
            round: 0,
            shrinks: 0,
        })
    }

    fn witness(f: &PwlFunction, c: &Rational, n: u32) -> Option<bool> {
        let v = f.eval_unchecked(c);
        (v.abs() > pow2_neg(n)).then(|| v.is_positive())
    }

    /// One round: tests both probes at the next precision and shrinks when
    /// either sign is witnessed. Returns whether it shrank.
    pub fn round(&mut self, f: &PwlFunction) -> bool {
        self.round += 1;
        let n = self.round;
        let ClosedInterval { lo: a, hi: b } = self.interval.clone();
        let third = (&b - &a) / BigInt::from(3);
        let c1 = &a + &third;
        let c2 = &c1 + &third;
        let s1 = Self::witness(f, &c1, n);
        let s2 = Self::witness(f, &c2, n);
        let (sa, sb) = (self.left_sign, !self.left_sign);
        let next = match (s1, s2) {
            (None, None) => return false,
            (Some(s1), None) => {
                if s1 != sa {
                    (a, c1, sa)
                } else {
                    (c1, b, s1)
                }
            }
            (None, Some(s2)) => {
                if s2 != sb {
                    (c2, b, s2)
                } else {
                    (a, c2, sa)
                }
            }
            (Some(s1), Some(s2)) => {
                if s1 != sa {
                    (a, c1, sa)
                } else if s1 != s2 {
                    (c1, c2, s1)
                } else {
                    (c2, b, s2)
                }
            }
        };
        self.interval = ClosedInterval { lo: next.0, hi: next.1 };
        self.left_sign = next.2;
        self.round = 0;
        self.shrinks += 1;
        true
    }

    /// Whether the bracket still straddles a sign change of `f`.
    pub fn invariant_holds(&self, f: &PwlFunction) -> bool {
        let fa = f.eval_unchecked(&self.interval.lo);
        let fb = f.eval_unchecked(&self.interval.hi);
        (&fa * &fb).is_negative() && fa.is_positive() == self.left_sign
    }
}

/// Trisects until the bracket has width `≤ 2^-k`; fuel counts rounds.
pub fn ivt_trisect(f: &PwlFunction, k: u32, fuel: RunBudget) -> Result<TrisectOutcome> {
    let mut t = Trisection::new(f)?;
    let target = pow2_neg(k);
    let mut spent = 0;
    while t.interval.width() > target {
        if spent == fuel.fuel() {
            return Ok(TrisectOutcome::Stalled(t.interval));
        }
        spent += 1;
        t.round(f);
    }
    Ok(TrisectOutcome::Zero(Dyadic::round_rational(
        &t.interval.midpoint(),
        k + 1,
    )))
}

/// Bit `i` of the standard binary expansion of `q ∈ [0,1)`.
pub fn rational_bit(q: &Rational, i: usize) -> bool {
    let scaled = q * Rational::from_integer(BigInt::from(1) << (i + 1));
    scaled.floor().to_integer() % BigInt::from(2) == BigInt::from(1)
}

/// Advice bits `r(0) = b`, `r(1..)` the binary expansion of `x`.
pub fn ivt_advice(b: bool, x: Rational) -> crate::foundations::FixedBits {
    crate::foundations::FixedBits::from_fn(move |i| if i == 0 { b } else { rational_bit(&x, i - 1) })
}

fn cylinder_of(advice: &dyn AdviceBits, len: usize) -> ClosedInterval {
    let bits: Vec<bool> = (0..len).map(|i| advice.bit(i + 1)).collect();
    let (lo, hi) = binary_cylinder(&bits);
    ClosedInterval {
        lo: lo.to_rational(),
        hi: hi.to_rational(),
    }
}

/// Output symbol `j` is a closed interval of width `≤ 2^-j` containing the
/// answer; ask for `k + 1` symbols to locate a zero within `2^-k`.
#[derive(Debug, Clone, Copy, Default)]
pub struct IvtMachine;

enum IvtProcess {
    /// `b = 0`: checks the cylinder of `x` of length `checked` for a zero.
    Point {
        f: Arc<PwlFunction>,
        checked: usize,
        emitted: usize,
    },
    Trisect {
        f: Arc<PwlFunction>,
        state: Trisection,
        emitted: usize,
    },
    Invalid,
}

impl Process<ClosedInterval> for IvtProcess {
    fn monitor(&mut self, advice: &dyn AdviceBits) -> bool {
        match self {
            IvtProcess::Point { f, checked, .. } => {
                *checked += 1;
                !f.has_zero_in(&cylinder_of(advice, *checked))
            }
            IvtProcess::Trisect { .. } => false,
            IvtProcess::Invalid => true,
        }
    }

    fn compute(&mut self, advice: &dyn AdviceBits) -> Option<ClosedInterval> {
        match self {
            IvtProcess::Point { emitted, .. } => {
                let c = cylinder_of(advice, *emitted);
                *emitted += 1;
                Some(c)
            }
            IvtProcess::Trisect { f, state, emitted } => {
                if state.interval.width() > pow2_neg(*emitted as u32) {
                    state.round(f);
                }
                if state.interval.width() <= pow2_neg(*emitted as u32) {
                    *emitted += 1;
                    return Some(state.interval.clone());
                }
                None
            }
            IvtProcess::Invalid => None,
        }
    }
}

impl LasVegasMachine for IvtMachine {
    type Input = Arc<PwlFunction>;
    type Out = ClosedInterval;

    fn advice_space(&self) -> AdviceSpace {
        AdviceSpace::CantorSpace
    }

    /// Reads `b` lazily on the first step; a function without sign change
    /// makes every run fail at once.
    fn spawn(&self, f: Arc<PwlFunction>) -> Box<dyn Process<ClosedInterval> + '_> {
        Box::new(Lazy {
            f: Some(f),
            inner: None,
        })
    }
}

struct Lazy {
    f: Option<Arc<PwlFunction>>,
    inner: Option<IvtProcess>,
}

impl Lazy {
    fn get(&mut self, advice: &dyn AdviceBits) -> &mut IvtProcess {
        self.inner.get_or_insert_with(|| {
            let f = self.f.take().expect("spawned once");
            match Trisection::new(&f) {
                Err(_) => IvtProcess::Invalid,
                Ok(state) if advice.bit(0) => IvtProcess::Trisect { f, state, emitted: 0 },
                Ok(_) => IvtProcess::Point {
                    f,
                    checked: 0,
                    emitted: 0,
                },
            }
        })
    }
}

impl Process<ClosedInterval> for Lazy {
    fn monitor(&mut self, advice: &dyn AdviceBits) -> bool {
        self.get(advice).monitor(advice)
    }

    fn compute(&mut self, advice: &dyn AdviceBits) -> Option<ClosedInterval> {
        self.get(advice).compute(advice)
    }
}

/// A single run of [`IvtMachine`] with `k + 1` output symbols.
pub fn ivt_probabilistic(
    f: &PwlFunction,
    advice: &dyn AdviceBits,
    k: u32,
    fuel: RunBudget,
) -> Result<crate::engine::RunOutcome<ClosedInterval>> {
    if !f.has_sign_change() {
        return Err(Error::Precondition("f(0) and f(1) must have opposite signs".into()));
    }
    Ok(crate::engine::lv_run(
        &IvtMachine,
        Arc::new(f.clone()),
        advice,
        k as usize + 1,
        fuel,
    ))
}
