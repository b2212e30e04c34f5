//! Choice on the naturals by mind changes.

use crate::foundations::RunBudget;

/// Guesses in adoption order, each with the enumeration step that caused it
/// (step 0 for the initial guess).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MindChangeLog {
    pub guesses: Vec<(u64, u64)>,
}

impl MindChangeLog {
    pub fn mind_changes(&self) -> usize {
        self.guesses.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnOutcome {
    pub guess: u64,
    pub log: MindChangeLog,
    /// The fuel ran out before the enumeration did.
    pub exhausted: bool,
}

/// Selects a member of `B` from an enumeration of `ℕ∖B`. `None` entries are
/// steps at which nothing is enumerated; the end of the iterator means
/// nothing more ever will be.
pub fn cn_select<I>(complement: I, fuel: RunBudget) -> CnOutcome
where
    I: IntoIterator<Item = Option<u64>>,
{
    let mut seen = std::collections::HashSet::new();
    let mut guess = 0u64;
    let mut log = MindChangeLog { guesses: vec![(0, 0)] };
    let mut items = complement.into_iter();
    for step in 1..=fuel.fuel() {
        let Some(item) = items.next() else {
            return CnOutcome {
                guess,
                log,
                exhausted: false,
            };
        };
        let Some(n) = item else { continue };
        seen.insert(n);
        if n == guess {
            guess += 1;
            while seen.contains(&guess) {
                guess += 1;
            }
            log.guesses.push((guess, step));
        }
    }
    let exhausted = items.next().is_some();
    CnOutcome { guess, log, exhausted }
}
