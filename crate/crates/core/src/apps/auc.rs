//! All-or-unique choice on `[0,1]` through probabilistic choice on intervals.
//!
//! A name of `A ∈ {[0,1]} ∪ {{x}}` is a sequence of negative information.
//! `K` turns it into the name of a proper interval: it copies the name while
//! it carries no information; when the first excluded interval shows up at
//! position `n`, it keeps reading until `A = {x}` is pinned to some `[a,b]`
//! of width `≤ 2^-n` and then names `[a,b]`. A point `y` of that interval is
//! drawn, and `H` passes approximations of `y` through until the input shows
//! negative information, after which it approximates `x` from the input.
//! Up to then `|y − x| ≤ 2^-n`, so the earlier output extends to `x`.

use num_traits::{One, Zero};

use crate::engine::{LasVegasMachine, Name, Process};
use crate::foundations::{binary_cylinder, pow2_neg, rat, AdviceBits, AdviceSpace, Dyadic, Rational};
use crate::sets::{hull, remaining_components, ClosedInterval, NegInfo, OpenInterval};

/// Test inputs for all-or-unique choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AucName {
    Full,
    /// `{x}`, silent before position `first_info`; from then on position `t`
    /// excludes `(-2, x − 2^-t)` or `(x + 2^-t, 3)`, alternating.
    Singleton {
        x: Rational,
        first_info: usize,
    },
}

impl AucName {
    pub fn symbol(&self, t: usize) -> NegInfo {
        match self {
            AucName::Full => None,
            AucName::Singleton { x, first_info } => {
                if t < *first_info {
                    return None;
                }
                let r = pow2_neg(t as u32);
                let iv = if (t - first_info).is_multiple_of(2) {
                    OpenInterval {
                        lo: rat(-2, 1),
                        hi: x - r,
                    }
                } else {
                    OpenInterval {
                        lo: x + r,
                        hi: rat(3, 1),
                    }
                };
                Some(iv)
            }
        }
    }

    pub fn to_name(&self) -> Name<NegInfo> {
        let me = self.clone();
        Name::from_fn(move |t| Some(me.symbol(t)))
    }
}

/// The convex hull of `[0,1]` minus the given exclusions.
fn hull_of(excluded: &[NegInfo]) -> Option<ClosedInterval> {
    hull(&remaining_components(excluded.iter().flatten()))
}

#[derive(Debug, Clone, Default)]
struct KState {
    read: Vec<NegInfo>,
    first_info: Option<usize>,
    /// Exclusions still to emit once the singleton is localized.
    pending: Vec<OpenInterval>,
    localized: bool,
}

impl KState {
    /// Reads one input symbol and emits one output symbol.
    fn step(&mut self, symbol: NegInfo) -> NegInfo {
        let t = self.read.len();
        let informative = symbol.is_some();
        self.read.push(symbol);
        let n = self.first_info.or(informative.then_some(t))?;
        self.first_info = Some(n);
        if !self.localized {
            if let Some(h) = hull_of(&self.read) {
                if h.width() <= pow2_neg(n as u32) {
                    self.localized = true;
                    self.pending = vec![
                        OpenInterval {
                            lo: rat(-1, 1),
                            hi: h.lo.clone(),
                        },
                        OpenInterval {
                            lo: h.hi.clone(),
                            hi: rat(2, 1),
                        },
                    ];
                    self.pending.reverse();
                }
            }
        }
        self.pending.pop()
    }
}

/// The first `steps` symbols of `K(p)`.
pub fn auc_k(p: &Name<NegInfo>, steps: usize) -> Vec<NegInfo> {
    let mut k = KState::default();
    (0..steps).map(|t| k.step(p.symbol(t).flatten())).collect()
}

/// Output `i` of `H` (within `2^-i` of the result), reading at most
/// `lookahead` symbols of `p`. `y(i)` must approximate the drawn point to
/// within `2^{-i-1}`.
pub fn auc_h(p: &Name<NegInfo>, y: &dyn Fn(usize) -> Option<Dyadic>, i: usize, lookahead: usize) -> Option<Dyadic> {
    let silent = (0..=i).all(|t| p.symbol(t).flatten().is_none());
    if silent {
        return y(i);
    }
    let target = pow2_neg(i as u32 + 1);
    let mut read = Vec::new();
    for t in 0..lookahead.max(i + 1) {
        read.push(p.symbol(t)?);
        if let Some(h) = hull_of(&read) {
            if read.iter().any(Option::is_some) && h.width() <= target {
                return Some(Dyadic::round_rational(&h.midpoint(), i as u32 + 2));
            }
        }
    }
    None
}

/// `a + (b − a)·c` for the binary cylinder `c` of the advice at length `len`.
fn scaled_cylinder(j: &ClosedInterval, advice: &dyn AdviceBits, len: usize) -> ClosedInterval {
    let (lo, hi) = binary_cylinder(&advice.prefix(len));
    let w = j.width();
    ClosedInterval {
        lo: &j.lo + &w * lo.to_rational(),
        hi: &j.lo + &w * hi.to_rational(),
    }
}

/// `K`, the interval sampler and `H` run together. `K` names an interval by
/// two exclusions, below and above it. The sampler waits up to `horizon`
/// symbols of `K`'s output for both; if they do not appear it draws from
/// `[0,1]`. Its monitor fires when the drawn point is seen to lie
/// outside the interval named so far.
#[derive(Debug, Clone)]
pub struct AucMachine {
    pub horizon: usize,
    pub lookahead: usize,
}

impl Default for AucMachine {
    fn default() -> Self {
        AucMachine {
            horizon: 64,
            lookahead: 4096,
        }
    }
}

struct AucProcess<'a> {
    machine: &'a AucMachine,
    input: Name<NegInfo>,
    k: KState,
    q: Vec<NegInfo>,
    scale: Option<ClosedInterval>,
    emitted: usize,
}

impl AucProcess<'_> {
    fn advance_k(&mut self) {
        let t = self.q.len();
        let s = self.k.step(self.input.symbol(t).flatten());
        self.q.push(s);
        if self.scale.is_none() {
            if self.q.iter().flatten().count() >= 2 {
                self.scale = hull_of(&self.q);
            } else if self.q.len() >= self.machine.horizon {
                self.scale = Some(ClosedInterval::unit());
            }
        }
    }
}

impl Process<Dyadic> for AucProcess<'_> {
    fn monitor(&mut self, advice: &dyn AdviceBits) -> bool {
        self.advance_k();
        let Some(j) = &self.scale else { return false };
        let drawn = scaled_cylinder(j, advice, self.q.len());
        match hull_of(&self.q) {
            Some(h) => !h.intersects(&drawn),
            None => true,
        }
    }

    fn compute(&mut self, advice: &dyn AdviceBits) -> Option<Dyadic> {
        let i = self.emitted;
        let scale = self.scale.clone();
        let y = move |i: usize| -> Option<Dyadic> {
            let j = scale.as_ref()?;
            let c = scaled_cylinder(j, advice, i + 3);
            Some(Dyadic::round_rational(&c.midpoint(), i as u32 + 4))
        };
        let out = auc_h(&self.input, &y, i, self.machine.lookahead)?;
        self.emitted += 1;
        Some(out)
    }
}

impl LasVegasMachine for AucMachine {
    type Input = Name<NegInfo>;
    type Out = Dyadic;

    fn advice_space(&self) -> AdviceSpace {
        AdviceSpace::CantorSpace
    }

    fn spawn(&self, input: Name<NegInfo>) -> Box<dyn Process<Dyadic> + '_> {
        Box::new(AucProcess {
            machine: self,
            input,
            k: KState::default(),
            q: Vec::new(),
            scale: None,
            emitted: 0,
        })
    }
}

/// The all-or-unique name of `RDIV(x, y)`: silent until `y > 2^-t` is seen
/// at precision `t`, then alternately excluding the parts of `[0,1]` below and
/// above the quotient interval computed from the approximations.
pub fn rdiv_auc_name(x: Rational, y: Rational) -> Name<NegInfo> {
    Name::from_fn(move |t| {
        let e = pow2_neg(t as u32 + 1);
        let xa = Dyadic::round_rational(&x, t as u32).to_rational();
        let ya = Dyadic::round_rational(&y, t as u32).to_rational();
        if ya <= pow2_neg(t as u32) {
            return Some(None);
        }
        let m = xa.clone().max(ya);
        let (m_lo, m_hi) = (&m - &e, &m + &e);
        let lo = ((&xa - &e).max(Rational::zero()) / m_hi).min(Rational::one());
        let hi = ((&xa + &e) / m_lo).min(Rational::one());
        let iv = if t % 2 == 0 {
            OpenInterval { lo: rat(-1, 1), hi: lo }
        } else {
            OpenInterval { lo: hi, hi: rat(2, 1) }
        };
        Some(Some(iv))
    })
}

/// Robust division as a machine: `rdiv_auc_name` fed to [`AucMachine`].
pub fn rdiv_machine_input(x: &Rational, y: &Rational) -> Name<NegInfo> {
    rdiv_auc_name(x.clone(), y.clone())
}
