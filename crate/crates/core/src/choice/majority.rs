//! Derandomizing a single-valued computation by majority vote.
//!
//! The oracle runs the randomized computation on a finite advice word and
//! reports either a dyadic center `c` (standing for `[c − 2^{-k-2}, c + 2^{-k-2}]`)
//! or nothing when that advice is inconsistent or undecided. If more than half
//! of the words of some length give pairwise intersecting intervals, that
//! majority overlaps the majority of correct runs, so the middle of their
//! common part lies within `2^{-k}` of the true value.

use crate::foundations::Dyadic;
use crate::sets::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MajorityOutcome {
    Value { value: Dyadic, depth: usize, support: u64 },
    Exhausted,
}

pub fn majority_radius(k: u32) -> Dyadic {
    Dyadic::pow2_neg(k as i64 + 2)
}

/// The largest set of centers within `width` of each other, as (size, min, max).
fn densest_window(centers: &mut [Dyadic], width: &Dyadic) -> Option<(u64, Dyadic, Dyadic)> {
    centers.sort();
    let mut best: Option<(u64, usize, usize)> = None;
    let mut lo = 0;
    for hi in 0..centers.len() {
        while &(&centers[hi] - &centers[lo]) > width {
            lo += 1;
        }
        let size = (hi - lo + 1) as u64;
        if best.is_none_or(|b| size > b.0) {
            best = Some((size, lo, hi));
        }
    }
    best.map(|(n, lo, hi)| (n, centers[lo].clone(), centers[hi].clone()))
}

pub fn majority_vote(oracle: &dyn Fn(&[bool]) -> Option<Dyadic>, k: u32, max_depth: usize) -> MajorityOutcome {
    let width = Dyadic::pow2_neg(k as i64 + 1);
    for depth in 0..=max_depth {
        let mut centers: Vec<Dyadic> = Word::all_of_length(depth).filter_map(|w| oracle(w.bits())).collect();
        if let Some((size, lo, hi)) = densest_window(&mut centers, &width) {
            if 2 * size > 1u64 << depth {
                return MajorityOutcome::Value {
                    value: lo.midpoint(&hi),
                    depth,
                    support: size,
                };
            }
        }
    }
    MajorityOutcome::Exhausted
}
