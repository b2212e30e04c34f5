//! Rational intervals and closed subsets of `[0,1]` named by negative information.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::rational_str;
use crate::foundations::Rational;

/// A closed interval `[lo, hi]` with `lo ≤ hi`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedInterval {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

impl ClosedInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::range("interval", format!("[{lo}, {hi}] is empty")));
        }
        Ok(ClosedInterval { lo, hi })
    }

    pub fn unit() -> Self {
        ClosedInterval {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }

    pub fn point(x: Rational) -> Self {
        ClosedInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &ClosedInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &ClosedInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Distance from `x` to the interval (zero inside).
    pub fn distance_to(&self, x: &Rational) -> Rational {
        if x < &self.lo {
            &self.lo - x
        } else if x > &self.hi {
            x - &self.hi
        } else {
            Rational::zero()
        }
    }
}

impl fmt::Debug for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// An open interval `(lo, hi)` with `lo < hi`. Endpoints may lie outside
/// `[0,1]`; the interval then excludes the part of `[0,1]` it covers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpenInterval {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

impl OpenInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::range("open interval", format!("({lo}, {hi}) is empty")));
        }
        Ok(OpenInterval { lo, hi })
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

impl fmt::Debug for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// One position of a negative-information name: either nothing new, or an
/// open interval disjoint from the named set.
pub type NegInfo = Option<OpenInterval>;

/// `[0,1]` with every listed open interval removed, as closed components
/// (single points included) in increasing order.
pub fn remaining_components<'a>(removed: impl IntoIterator<Item = &'a OpenInterval>) -> Vec<ClosedInterval> {
    let mut parts = vec![ClosedInterval::unit()];
    for gap in removed {
        let mut next = Vec::with_capacity(parts.len() + 1);
        for p in parts {
            if p.lo <= gap.lo {
                next.push(ClosedInterval {
                    lo: p.lo.clone(),
                    hi: p.hi.clone().min(gap.lo.clone()),
                });
            }
            if gap.hi <= p.hi {
                next.push(ClosedInterval {
                    lo: p.lo.max(gap.hi.clone()),
                    hi: p.hi,
                });
            }
        }
        parts = next;
    }
    parts
}

/// A closed `A ⊆ [0,1]` named by an enumeration of open rational intervals
/// exhausting its complement. `None` entries carry no information; positions
/// matter for transducers that read the name incrementally.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NegClosedUnit {
    pub entries: Vec<NegInfo>,
}

impl NegClosedUnit {
    pub fn new(entries: Vec<NegInfo>) -> Self {
        NegClosedUnit { entries }
    }

    pub fn from_intervals(removed: Vec<OpenInterval>) -> Self {
        NegClosedUnit {
            entries: removed.into_iter().map(Some).collect(),
        }
    }

    pub fn removed(&self) -> impl Iterator<Item = &OpenInterval> {
        self.entries.iter().flatten()
    }

    /// Components of the set described by the whole (finite) name.
    pub fn components(&self) -> Vec<ClosedInterval> {
        remaining_components(self.removed())
    }

    /// Lebesgue measure of the named set, exact for a finite name.
    pub fn measure(&self) -> Rational {
        self.components()
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c.width())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &Rational::zero() <= x && x <= &Rational::one() && !self.removed().any(|g| g.contains(x))
    }

    /// Convex hull of what is left after the first `n` entries.
    pub fn hull_after(&self, n: usize) -> Option<ClosedInterval> {
        hull(&remaining_components(self.entries.iter().take(n).flatten()))
    }
}

pub fn hull(parts: &[ClosedInterval]) -> Option<ClosedInterval> {
    let lo = parts.iter().map(|p| &p.lo).min()?.clone();
    let hi = parts.iter().map(|p| &p.hi).max()?.clone();
    Some(ClosedInterval { lo, hi })
}
