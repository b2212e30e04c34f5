//! Pairing of naturals and of sequences.

use num_integer::Roots;

/// Cantor pairing `⟨n,k⟩ = (n+k+1)(n+k)/2 + k`.
///
/// Panics if the result does not fit in a `u64`.
pub fn cantor_pair(n: u64, k: u64) -> u64 {
    let s = n as u128 + k as u128;
    let v = s * (s + 1) / 2 + k as u128;
    u64::try_from(v).expect("cantor_pair overflow")
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(z: u64) -> (u64, u64) {
    let z = z as u128;
    let w = ((8 * z + 1).sqrt() - 1) / 2;
    let t = w * (w + 1) / 2;
    let k = z - t;
    ((w - k) as u64, k as u64)
}

/// Prefix of `⟨p,q⟩`: even positions read `p`, odd positions read `q`.
///
/// The result covers every position for which the source symbol exists, so
/// its length is `2·min(|p|,|q|)`, plus one when `p` is longer.
pub fn interleave<T: Clone>(p: &[T], q: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    for i in 0.. {
        match (p.get(i), q.get(i)) {
            (Some(a), Some(b)) => {
                out.push(a.clone());
                out.push(b.clone());
            }
            (Some(a), None) => {
                out.push(a.clone());
                break;
            }
            _ => break,
        }
    }
    out
}

/// `⟨p,q⟩` for random-access streams.
pub fn interleave_with<T, P, Q>(p: P, q: Q) -> impl Fn(usize) -> T
where
    P: Fn(usize) -> T,
    Q: Fn(usize) -> T,
{
    move |n| if n % 2 == 0 { p(n / 2) } else { q(n / 2) }
}

pub fn project_left<T: Clone>(r: &[T]) -> Vec<T> {
    r.iter().step_by(2).cloned().collect()
}

pub fn project_right<T: Clone>(r: &[T]) -> Vec<T> {
    r.iter().skip(1).step_by(2).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn pairing_values() {
        assert_eq!(cantor_pair(0, 0), 0);
        assert_eq!(cantor_pair(1, 0), 1);
        assert_eq!(cantor_pair(0, 1), 2);
        assert_eq!(cantor_pair(2, 0), 3);
    }

    #[test]
    fn pairing_is_bijective_below_1000() {
        let mut seen = HashSet::new();
        for n in 0..1000 {
            for k in 0..1000 {
                let z = cantor_pair(n, k);
                assert_eq!(cantor_unpair(z), (n, k));
                assert!(seen.insert(z), "collision at ({n},{k})");
            }
        }
        // the image of a triangle n+k < N is exactly 0..N(N+1)/2
        for z in 0..500_500u64 {
            let (n, k) = cantor_unpair(z);
            assert_eq!(cantor_pair(n, k), z);
        }
    }

    #[test]
    fn interleave_constant_streams() {
        let p = vec![0u8; 4];
        let q = vec![1u8; 4];
        assert_eq!(interleave(&p, &q), vec![0, 1, 0, 1, 0, 1, 0, 1]);
        let f = interleave_with(|_| 0u8, |_| 1u8);
        assert_eq!((0..6).map(f).collect::<Vec<_>>(), vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn interleaved_cylinder_measure_at_n3() {
        // Every pair (w, v) of length-3 words: count the length-6 words lying
        // in the cylinder of ⟨w,v⟩. One of 2^6 means measure 2^-6.
        let words: Vec<Vec<bool>> = (0u32..8).map(|b| (0..3).map(|i| b >> i & 1 == 1).collect()).collect();
        for w in &words {
            for v in &words {
                let hits = (0u32..(1 << 6))
                    .map(|b| (0..6).map(|i| b >> i & 1 == 1).collect::<Vec<bool>>())
                    .filter(|z| &project_left(z) == w && &project_right(z) == v)
                    .count();
                assert_eq!(hits, 1);
            }
        }
    }

    proptest! {
        #[test]
        fn projections_invert_interleave(p in proptest::collection::vec(any::<bool>(), 0..40),
                                         q in proptest::collection::vec(any::<bool>(), 0..40)) {
            let n = p.len().min(q.len());
            let z = interleave(&p[..n], &q[..n]);
            prop_assert_eq!(project_left(&z), p[..n].to_vec());
            prop_assert_eq!(project_right(&z), q[..n].to_vec());
        }
    }
}
