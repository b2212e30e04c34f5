//! Searching for a word below which a closed set has density close to one.
//!
//! Candidates `w_0, w_1, …` run through `{0,1}*` in length-lexicographic
//! order. At stage `s` the first `s` exclusions are known and the relative
//! measure of `T` below each candidate is bounded above at depth `s`; a
//! candidate is rejected once that bound drops below `1 − 2^{-k}`. The guess
//! is the least candidate not rejected, which changes finitely often.

use num_traits::Zero;

use crate::foundations::{Dyadic, RunBudget};
use crate::sets::{ExclusionEnumeration, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness {
    pub word: Word,
    /// `μ(A ∩ w·2^ℕ)·2^{|w|}`, exact.
    pub relative_measure: Dyadic,
    pub rejected: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LdlOutcome {
    Certified(DensityWitness),
    /// Fuel ran out (or the tree is infinite); `guess` is the current candidate.
    Exhausted {
        guess: Word,
        rejected: u64,
    },
}

fn threshold(k: u32) -> Dyadic {
    Dyadic::one() - Dyadic::pow2_neg(k as i64)
}

/// Fuel counts stages.
pub fn ldl_search(t: &dyn ExclusionEnumeration, k: u32, fuel: RunBudget) -> LdlOutcome {
    let bound = threshold(k);
    let mut guess_index = 0u64;
    for s in 1..=fuel.fuel() {
        let stage = t.stage(s as usize);
        let depth = s as usize;
        let complete = t.total().is_some_and(|n| s as usize >= n);
        if complete && stage.measure_exact().is_zero() {
            break;
        }
        // only the current guess and its successors can be rejected; every
        // earlier candidate already was
        while guess_index < s {
            let w = Word::length_lex(guess_index);
            let upper = stage.subtree(w.bits()).measure_upper(depth);
            if upper < bound {
                guess_index += 1;
                continue;
            }
            if complete && depth >= stage.max_excluded_len() {
                return LdlOutcome::Certified(DensityWitness {
                    word: w,
                    relative_measure: upper,
                    rejected: guess_index,
                });
            }
            break;
        }
    }
    LdlOutcome::Exhausted {
        guess: Word::length_lex(guess_index),
        rejected: guess_index,
    }
}
