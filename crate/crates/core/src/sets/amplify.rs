//! Parallel sums of closed sets of success.
//!
//! Given `A, B ⊆ 2^ℕ`, the set `C = (A × 2^ℕ) ∪ (2^ℕ × B)` is carried back to
//! `2^ℕ` by bit-interleaving (`A` on even positions, `B` on odd ones). Its
//! complement is `(2^ℕ∖A) × (2^ℕ∖B)`, the union of the products of excluded
//! cylinders.

use super::{CoTree, Word};

/// The words of the interleaved cylinder `u × v`.
fn interleaved_cylinder(u: &Word, v: &Word) -> Vec<Word> {
    let len = (2 * u.len()).saturating_sub(1).max(2 * v.len());
    let fixed = |i: usize| -> Option<bool> {
        if i.is_multiple_of(2) {
            u.bits().get(i / 2).copied()
        } else {
            v.bits().get(i / 2).copied()
        }
    };
    let mut words = vec![Vec::with_capacity(len)];
    for i in 0..len {
        words = match fixed(i) {
            Some(b) => {
                words.iter_mut().for_each(|w| w.push(b));
                words
            }
            None => words
                .into_iter()
                .flat_map(|w| {
                    let mut one = w.clone();
                    one.push(true);
                    let mut zero = w;
                    zero.push(false);
                    [zero, one]
                })
                .collect(),
        };
    }
    words.into_iter().map(Word).collect()
}

pub fn product_amplify(a: &CoTree, b: &CoTree) -> CoTree {
    let mut excluded = Vec::new();
    for u in a.excluded() {
        for v in b.excluded() {
            excluded.extend(interleaved_cylinder(u, v));
        }
    }
    CoTree::from_excluded(excluded)
}
