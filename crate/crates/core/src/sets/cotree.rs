//! Binary trees given by negative information.
//!
//! A [`CoTree`] lists excluded words; each excluded `u` removes the cylinder
//! `u·2^ℕ`. A word is a member when no excluded word is a prefix of it, and
//! the infinite paths `[T]` are the sequences all of whose prefixes are
//! members. Nothing here assumes the tree is pruned.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::Word;
use crate::error::Result;
use crate::foundations::{AdviceBits, Dyadic, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct CoTree {
    /// The exclusions in the order they were enumerated.
    enumeration: Vec<Word>,
    /// Prefix-free normal form, sorted length-lexicographically.
    antichain: Vec<Word>,
}

impl fmt::Debug for CoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoTree").field("excluded", &self.antichain).finish()
    }
}

fn prefix_free(words: &[Word]) -> Vec<Word> {
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: HashSet<&[bool]> = HashSet::new();
    let mut out = Vec::new();
    for w in sorted {
        let covered = (0..=w.len()).any(|i| kept.contains(&w.bits()[..i]));
        if !covered {
            kept.insert(w.bits());
            out.push(w.clone());
        }
    }
    out
}

impl CoTree {
    pub fn from_excluded(words: Vec<Word>) -> Self {
        let antichain = prefix_free(&words);
        CoTree {
            enumeration: words,
            antichain,
        }
    }

    /// Parses `0`/`1` strings.
    pub fn parse<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let words = words
            .iter()
            .map(|w| w.as_ref().parse())
            .collect::<Result<Vec<Word>>>()?;
        Ok(Self::from_excluded(words))
    }

    pub fn full() -> Self {
        Self::from_excluded(Vec::new())
    }

    /// Prefix-free normal form of the exclusions.
    pub fn excluded(&self) -> &[Word] {
        &self.antichain
    }

    pub fn enumeration(&self) -> &[Word] {
        &self.enumeration
    }

    pub fn max_excluded_len(&self) -> usize {
        self.antichain.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn member(&self, w: &[bool]) -> bool {
        !self.antichain.iter().any(|u| u.is_prefix_of(w))
    }

    /// Length of the shortest non-member prefix of `r`, looking at most
    /// `horizon` bits deep.
    pub fn first_failure(&self, r: &dyn AdviceBits, horizon: usize) -> Option<usize> {
        self.antichain
            .iter()
            .filter(|u| u.len() <= horizon && (0..u.len()).all(|i| r.bit(i) == u.bits()[i]))
            .map(Word::len)
            .min()
    }

    /// `|T ∩ {0,1}^n| · 2^-n`, exact. Nonincreasing in `n`, bounded below by `μ([T])`.
    pub fn measure_upper(&self, n: usize) -> Dyadic {
        let removed = self
            .antichain
            .iter()
            .filter(|u| u.len() <= n)
            .fold(Dyadic::zero(), |acc, u| acc + Dyadic::pow2_neg(u.len() as i64));
        Dyadic::one() - removed
    }

    /// `μ([T]) = 1 − Σ_u 2^{-|u|}` over the prefix-free exclusions.
    pub fn measure_exact(&self) -> Rational {
        let removed = self.antichain.iter().fold(Rational::from_integer(0.into()), |acc, u| {
            acc + Dyadic::pow2_neg(u.len() as i64).to_rational()
        });
        Rational::one() - removed
    }

    /// The tree `{v : wv ∈ T}` of continuations below `w`.
    pub fn subtree(&self, w: &[bool]) -> CoTree {
        if self.antichain.iter().any(|u| u.len() <= w.len() && u.is_prefix_of(w)) {
            return CoTree::from_excluded(vec![Word::empty()]);
        }
        let below = self
            .antichain
            .iter()
            .filter(|u| u.bits().starts_with(w))
            .map(|u| Word(u.bits()[w.len()..].to_vec()))
            .collect();
        CoTree::from_excluded(below)
    }

    /// The tree built from the first `stage` enumerated exclusions.
    pub fn truncated(&self, stage: usize) -> CoTree {
        CoTree::from_excluded(self.enumeration[..stage.min(self.enumeration.len())].to_vec())
    }
}

/// Constructor from a list of `0`/`1` strings.
pub fn tree_from_excluded<S: AsRef<str>>(words: &[S]) -> Result<CoTree> {
    CoTree::parse(words)
}

pub fn tree_measure_upper(t: &CoTree, n: usize) -> Dyadic {
    t.measure_upper(n)
}

pub fn tree_measure_exact(t: &CoTree) -> Rational {
    t.measure_exact()
}

/// A name of a closed subset of Cantor space by an enumeration of excluded
/// words, possibly infinite. Stage `s` has seen the first `s` exclusions.
pub trait ExclusionEnumeration {
    fn stage(&self, s: usize) -> CoTree;
    /// Number of exclusions when the list is finite.
    fn total(&self) -> Option<usize>;
}

impl ExclusionEnumeration for CoTree {
    fn stage(&self, s: usize) -> CoTree {
        self.truncated(s)
    }

    fn total(&self) -> Option<usize> {
        Some(self.enumeration.len())
    }
}

/// An infinite exclusion list produced on demand. Queries see only the
/// horizon enumerated so far.
#[derive(Clone)]
pub struct LazyCoTree {
    source: Arc<dyn Fn(usize) -> Word + Send + Sync>,
}

impl fmt::Debug for LazyCoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LazyCoTree")
    }
}

impl LazyCoTree {
    pub fn new(source: impl Fn(usize) -> Word + Send + Sync + 'static) -> Self {
        LazyCoTree {
            source: Arc::new(source),
        }
    }
}

impl ExclusionEnumeration for LazyCoTree {
    fn stage(&self, s: usize) -> CoTree {
        CoTree::from_excluded((0..s).map(|i| (self.source)(i)).collect())
    }

    fn total(&self) -> Option<usize> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rat;
    use proptest::prelude::*;

    fn tree(ws: &[&str]) -> CoTree {
        CoTree::parse(ws).unwrap()
    }

    fn w(s: &str) -> Vec<bool> {
        s.parse::<Word>().unwrap().0
    }

    /// Member count at depth n by brute-force enumeration.
    fn brute_upper(t: &CoTree, n: usize) -> Rational {
        let count = Word::all_of_length(n).filter(|x| t.member(x.bits())).count();
        Rational::new((count as i64).into(), (1i64 << n).into())
    }

    #[test]
    fn membership_examples() {
        let full = tree(&[]);
        assert!(full.member(&w("")) && full.member(&w("0101")));
        let t = tree(&["00"]);
        assert!(t.member(&w("01")));
        assert!(!t.member(&w("000")));
        let empty = tree(&["0", "1"]);
        assert!(!empty.member(&w("0")) && !empty.member(&w("1")) && !empty.member(&w("110")));
        assert_eq!(empty.measure_exact(), rat(0, 1));
        assert!("0a1".parse::<Word>().is_err());
        assert!(CoTree::parse(&["01", "x"]).is_err());
    }

    #[test]
    fn normalization_removes_redundant_words() {
        let t = tree(&["0110", "01", "011", "1", "01"]);
        assert_eq!(t.excluded(), &[Word(w("1")), Word(w("01"))]);
    }

    #[test]
    fn measure_examples() {
        assert_eq!(tree(&["00"]).measure_upper(2).to_rational(), rat(3, 4));
        assert_eq!(tree(&[]).measure_upper(10), Dyadic::one());
        // 24 of the 32 depth-5 words survive
        assert_eq!(brute_upper(&tree(&["00"]), 5), rat(24, 32));
        assert_eq!(tree(&["00"]).measure_upper(5).to_rational(), rat(3, 4));
        assert_eq!(tree(&["00"]).measure_exact(), rat(3, 4));
        assert_eq!(tree(&["0"]).measure_exact(), rat(1, 2));
        assert_eq!(tree(&["00", "01", "10"]).measure_exact(), rat(1, 4));
    }

    #[test]
    fn subtree_and_truncation() {
        let t = tree(&["00", "101", "11"]);
        assert_eq!(t.subtree(&w("1")).excluded(), &[Word(w("1")), Word(w("01"))]);
        assert_eq!(t.subtree(&w("001")).measure_exact(), rat(0, 1));
        assert_eq!(t.subtree(&w("01")).measure_exact(), rat(1, 1));
        assert_eq!(t.truncated(1).excluded(), &[Word(w("00"))]);
        let lazy = LazyCoTree::new(|i| Word::from_index(1, i + 1));
        assert_eq!(lazy.stage(3).measure_exact(), rat(1, 8));
        assert_eq!(lazy.total(), None);
    }

    #[test]
    fn first_failure_matches_membership() {
        let t = tree(&["00", "011"]);
        let r = crate::foundations::FixedBits::parse("0110", false).unwrap();
        assert_eq!(t.first_failure(&r, 10), Some(3));
        assert_eq!(t.first_failure(&r, 2), None);
    }

    fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(any::<bool>(), 0..=max_len).prop_map(Word)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn exact_measure_is_limit_of_upper_bounds(words in proptest::collection::vec(word_strategy(7), 0..8)) {
            let t = CoTree::from_excluded(words);
            let depth = t.max_excluded_len();
            let mut prev = Dyadic::one();
            for n in 0..=depth + 2 {
                let up = t.measure_upper(n);
                prop_assert!(up <= prev);
                prop_assert!(up.to_rational() >= t.measure_exact());
                prop_assert_eq!(up.to_rational(), brute_upper(&t, n));
                prev = up;
            }
            prop_assert_eq!(t.measure_upper(depth).to_rational(), t.measure_exact());
        }

        #[test]
        fn membership_is_prefix_closed(words in proptest::collection::vec(word_strategy(5), 0..6),
                                       x in word_strategy(8)) {
            let t = CoTree::from_excluded(words);
            if t.member(x.bits()) {
                for i in 0..x.len() {
                    prop_assert!(t.member(&x.bits()[..i]));
                }
            }
        }
    }
}
