//! Sampling a path through a tree of positive measure.

use crate::foundations::{AdviceBits, RunBudget};
use crate::sets::CoTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WwklOutcome {
    /// Every prefix up to the fuel bound is a member; these are its bits.
    Emitting(Vec<bool>),
    /// `r|_n ∉ T` for this `n`, the least such.
    Failed(usize),
    Exhausted,
}

/// Emits `r` bit by bit while its prefixes stay in `T`. Fuel bounds the
/// number of bits examined, so at most `fuel` bits are emitted.
pub fn wwkl_path(t: &CoTree, r: &dyn AdviceBits, fuel: RunBudget) -> WwklOutcome {
    let horizon = fuel.fuel() as usize;
    if let Some(n) = t.first_failure(r, horizon) {
        return WwklOutcome::Failed(n);
    }
    if horizon == 0 {
        return WwklOutcome::Exhausted;
    }
    WwklOutcome::Emitting(r.prefix(horizon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::FixedBits;
    use crate::sets::Word;

    fn tree(ws: &[&str]) -> CoTree {
        CoTree::parse(ws).unwrap()
    }

    #[test]
    fn wwkl_examples() {
        let t = tree(&["00"]);
        let r = FixedBits::parse("0", true).unwrap();
        match wwkl_path(&t, &r, RunBudget(40)) {
            WwklOutcome::Emitting(p) => {
                assert_eq!(p.len(), 40);
                assert!((0..=40).all(|n| t.member(&p[..n])));
            }
            other => panic!("{other:?}"),
        }
        let r = FixedBits::parse("001", false).unwrap();
        assert_eq!(wwkl_path(&t, &r, RunBudget(40)), WwklOutcome::Failed(2));
        let empty = tree(&["0", "1"]);
        for s in ["0", "1"] {
            let r = FixedBits::parse(s, false).unwrap();
            assert_eq!(wwkl_path(&empty, &r, RunBudget(5)), WwklOutcome::Failed(1));
        }
        assert_eq!(
            wwkl_path(&t, &FixedBits::parse("1", false).unwrap(), RunBudget(0)),
            WwklOutcome::Exhausted
        );
    }

    #[test]
    fn failure_iff_excluded_prefix() {
        // all exclusion sets over words of length 1..=3 would be 2^14; use every
        // set of at most two such words plus a few larger ones
        let words: Vec<Word> = (1..15).map(Word::length_lex).collect();
        let mut sets: Vec<Vec<Word>> = vec![vec![]];
        for i in 0..words.len() {
            sets.push(vec![words[i].clone()]);
            for j in i + 1..words.len() {
                sets.push(vec![words[i].clone(), words[j].clone()]);
            }
        }
        sets.push(words[7..].to_vec());
        sets.push(vec![words[0].clone(), words[5].clone(), words[12].clone()]);
        for set in sets {
            let t = CoTree::from_excluded(set.clone());
            for r in Word::all_of_length(6) {
                let bits = FixedBits::new(r.0.clone(), false);
                let excluded = set.iter().any(|u| u.is_prefix_of(r.bits()));
                let failed = matches!(wwkl_path(&t, &bits, RunBudget(6)), WwklOutcome::Failed(_));
                assert_eq!(failed, excluded, "{set:?} {r}");
            }
        }
    }
}
