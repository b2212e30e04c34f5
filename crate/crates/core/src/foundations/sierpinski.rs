//! Sierpiński observation: an event that is witnessable at a finite step,
//! whose absence is only the limit of not having seen it yet.

use super::RunBudget;

/// Monotone observation state of a semi-decidable event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SierpinskiCell {
    #[default]
    NotYetObserved,
    /// First step (1-based) at which the event was seen.
    ObservedOne(u64),
}

impl SierpinskiCell {
    /// Record the reading at `step`. Once observed, the cell never reverts and
    /// keeps the first step.
    pub fn record(&mut self, step: u64, fired: bool) {
        if fired && *self == SierpinskiCell::NotYetObserved {
            *self = SierpinskiCell::ObservedOne(step);
        }
    }

    pub fn is_observed(&self) -> bool {
        matches!(self, SierpinskiCell::ObservedOne(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observation {
    NotYetAfter(u64),
    ObservedOne(u64),
}

/// Polls `producer` at steps `1..=fuel` and reports the first step at which it
/// reads nonzero.
pub fn sierp_observe(mut producer: impl FnMut(u64) -> bool, budget: RunBudget) -> Observation {
    let mut cell = SierpinskiCell::NotYetObserved;
    for step in 1..=budget.fuel() {
        cell.record(step, producer(step));
        if let SierpinskiCell::ObservedOne(t) = cell {
            return Observation::ObservedOne(t);
        }
    }
    Observation::NotYetAfter(budget.fuel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn observation_examples() {
        assert_eq!(
            sierp_observe(|_| false, RunBudget(1000)),
            Observation::NotYetAfter(1000)
        );
        assert_eq!(sierp_observe(|t| t >= 7, RunBudget(1000)), Observation::ObservedOne(7));
        assert_eq!(sierp_observe(|t| t >= 7, RunBudget(5)), Observation::NotYetAfter(5));
    }

    #[test]
    fn cell_is_monotone() {
        let mut c = SierpinskiCell::default();
        c.record(1, false);
        c.record(2, true);
        c.record(3, false);
        c.record(4, true);
        assert_eq!(c, SierpinskiCell::ObservedOne(2));
    }

    proptest! {
        #[test]
        fn monotone_in_fuel(fire_at in 1u64..200, f in 0u64..200, extra in 0u64..200) {
            let a = sierp_observe(|t| t >= fire_at, RunBudget(f));
            let b = sierp_observe(|t| t >= fire_at, RunBudget(f + extra));
            if let Observation::ObservedOne(t) = a {
                prop_assert_eq!(b, Observation::ObservedOne(t));
            }
        }
    }
}
