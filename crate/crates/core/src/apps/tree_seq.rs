//! Trees converging to a tree of positive measure for choice on intervals.
//!
//! From the `n`-th approximation `I_n` of a closed interval `I ⊆ [0,1]`,
//! `T_n` keeps below `0` the binary names of points of `I_n` (so that `[T_n]`
//! contains a copy of `½·I_n`), and below `1` all words of length `≤ k`, for
//! the largest `k` with `width(I_n) < 2^-k`. The limit keeps the whole
//! `1`-branch exactly when `I` is a single point.

use crate::error::{Error, Result};
use crate::foundations::binary_cylinder;
use crate::sets::{ClosedInterval, CoTree, Word};

fn cylinder(w: &Word) -> ClosedInterval {
    let (lo, hi) = binary_cylinder(w.bits());
    ClosedInterval {
        lo: lo.to_rational(),
        hi: hi.to_rational(),
    }
}

/// Largest `k` with `m < 2^-k`: `None` when `m ≥ 1`, unbounded when `m = 0`.
fn hedge_depth(m: &crate::Rational) -> Option<Option<usize>> {
    use num_traits::{One, Zero};
    if m.is_zero() {
        return Some(None);
    }
    let one = crate::Rational::one();
    if m >= &one {
        return None;
    }
    let mut k = 0;
    while m < &crate::foundations::pow2_neg(k as u32 + 1) {
        k += 1;
    }
    Some(Some(k))
}

/// `T_n` from the approximations `approx[0..=n]`, which must be nested.
pub fn ivt_tree_sequence(approx: &[ClosedInterval], n: usize) -> Result<CoTree> {
    let current = approx
        .get(n)
        .ok_or_else(|| Error::Precondition(format!("approximation {n} not available")))?;
    if approx[..=n].windows(2).any(|w| !w[0].contains_interval(&w[1])) {
        return Err(Error::Precondition("interval approximations are not nested".into()));
    }
    if !ClosedInterval::unit().contains_interval(&approx[0]) {
        return Err(Error::Precondition("interval approximations must lie in [0,1]".into()));
    }
    let mut excluded = Vec::new();
    let mut stack = vec![Word::empty()];
    while let Some(w) = stack.pop() {
        let c = cylinder(&w);
        if !c.intersects(current) {
            excluded.push(Word(std::iter::once(false).chain(w.0.iter().copied()).collect()));
        } else if !current.contains_interval(&c) && w.len() < n {
            stack.push(w.child(true));
            stack.push(w.child(false));
        }
    }
    match hedge_depth(&current.width()) {
        None => excluded.push(Word(vec![true])),
        Some(Some(k)) => {
            excluded.extend(Word::all_of_length(k + 1).map(|u| Word(std::iter::once(true).chain(u.0).collect())))
        }
        Some(None) => {}
    }
    Ok(CoTree::from_excluded(excluded))
}
