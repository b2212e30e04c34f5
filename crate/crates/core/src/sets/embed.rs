//! Measure-preserving maps between advice spaces.
//!
//! Baire space carries the product of geometric measures
//! `μ({p : p(i) = k}) = 2^{-k-1}`. The embedding `ι(p) = 1^{p(0)} 0 1^{p(1)} 0 …`
//! carries it onto the uniform measure on Cantor space, and the signum map
//! `sgn(p)(i) = min(p(i), 1)` pulls the uniform measure back to itself.

use super::Word;
use crate::foundations::Dyadic;

/// `1^{w(0)} 0 1^{w(1)} 0 … 1^{w(k)} 0`.
pub fn baire_to_cantor_prefix(w: &[u64]) -> Word {
    let mut bits = Vec::with_capacity(w.iter().map(|&k| k as usize + 1).sum());
    for &k in w {
        bits.extend(std::iter::repeat_n(true, k as usize));
        bits.push(false);
    }
    Word(bits)
}

/// Geometric-product measure of the Baire cylinder `w·ℕ^ℕ`.
pub fn baire_cylinder_measure(w: &[u64]) -> Dyadic {
    Dyadic::pow2_neg(w.iter().map(|&k| k as i64 + 1).sum())
}

/// Uniform measure of the Cantor cylinder `u·2^ℕ`.
pub fn cantor_cylinder_measure(u: &[bool]) -> Dyadic {
    Dyadic::pow2_neg(u.len() as i64)
}

/// Lower and upper bounds on `μ(sgn^{-1}(u·2^ℕ))`.
///
/// Each coordinate contributes the mass of `{0}` or of `{1, 2, …}`; the
/// latter is summed for `k ≤ depth` and the unseen tail is added for the
/// upper bound only.
pub fn signum_preimage_measure(u: &[bool], depth: usize) -> (Dyadic, Dyadic) {
    let geometric = |k: usize| Dyadic::pow2_neg(k as i64 + 1);
    let positive: Dyadic = (1..=depth).fold(Dyadic::zero(), |acc, k| acc + geometric(k));
    let tail = geometric(depth);
    let zero_mass = geometric(0);
    let mut lower = Dyadic::one();
    let mut upper = Dyadic::one();
    for &bit in u {
        if bit {
            lower = &lower * &positive;
            upper = &upper * &(&positive + &tail);
        } else {
            lower = &lower * &zero_mass;
            upper = &upper * &zero_mass;
        }
    }
    (lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{advice_sample, read_geometric, AdviceSeed, AdviceSpace, FixedBits};

    #[test]
    fn embedding_examples() {
        assert_eq!(baire_to_cantor_prefix(&[2]).to_string(), "110");
        assert_eq!(baire_cylinder_measure(&[2]), Dyadic::pow2_neg(3));
        assert_eq!(baire_to_cantor_prefix(&[]).to_string(), "");
        assert_eq!(baire_cylinder_measure(&[]), Dyadic::one());
        let w = baire_to_cantor_prefix(&[0, 1]);
        assert_eq!(w.to_string(), "010");
        assert_eq!(cantor_cylinder_measure(w.bits()), baire_cylinder_measure(&[0, 1]));
    }

    fn all_baire_words(max_len: usize, bound: u64) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for k in 0..bound {
                    let mut v: Vec<u64> = w.clone();
                    v.push(k);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn embedding_is_monotone_injective_and_measure_preserving() {
        let words = all_baire_words(5, 5);
        let mut seen = std::collections::HashSet::new();
        for w in &words {
            let image = baire_to_cantor_prefix(w);
            assert!(seen.insert(image.clone()), "collision at {w:?}");
            assert_eq!(cantor_cylinder_measure(image.bits()), baire_cylinder_measure(w));
            if let Some((_, init)) = w.split_last() {
                assert!(baire_to_cantor_prefix(init).is_prefix_of(image.bits()));
            }
            // decoding with the advice reader inverts the embedding
            let bits = FixedBits::new(image.0.clone(), false);
            let mut pos = 0;
            for &k in w {
                let (n, next) = read_geometric(&bits, pos);
                assert_eq!(n, k);
                pos = next;
            }
        }
    }

    #[test]
    fn sampled_baire_prefixes_match_cylinder_law() {
        let mut hits = 0u32;
        let trials = 20_000u64;
        for t in 0..trials {
            let s = advice_sample(&AdviceSpace::BaireSpace, AdviceSeed::new(11).split(t)).unwrap();
            if s.baire_prefix(2).unwrap() == [0, 1] {
                hits += 1;
            }
        }
        let freq = hits as f64 / trials as f64;
        assert!((freq - 0.125).abs() < 0.01, "frequency {freq}");
    }

    #[test]
    fn signum_bounds() {
        let (lo, hi) = signum_preimage_measure(&[], 7);
        assert_eq!((lo, hi), (Dyadic::one(), Dyadic::one()));
        let half = Dyadic::pow2_neg(1);
        let (lo, hi) = signum_preimage_measure(&[true], 20);
        assert!(lo <= half && half <= hi);
        assert!(&hi - &lo <= Dyadic::pow2_neg(20));
        let quarter = Dyadic::pow2_neg(2);
        let (lo, hi) = signum_preimage_measure(&[true, false], 20);
        assert!(lo <= quarter && quarter <= hi);
        assert!(&hi - &lo <= Dyadic::pow2_neg(19));
        for depth in 3..30 {
            for u in Word::all_of_length(4) {
                let (lo, hi) = signum_preimage_measure(u.bits(), depth);
                let target = cantor_cylinder_measure(u.bits());
                assert!(lo <= target && target <= hi);
                let width = Dyadic::from_int(u.len() as i64) * Dyadic::pow2_neg(depth as i64);
                assert!(&hi - &lo <= width);
            }
        }
    }
}
