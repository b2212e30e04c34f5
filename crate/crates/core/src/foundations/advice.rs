//! Advice spaces and their seeded samplers.
//!
//! All samplers draw from one uniform bit source. The generator is ChaCha8
//! (`rand_chacha`): an [`AdviceSeed`] `(seed, stream)` keys the cipher with
//! `ChaCha8Rng::seed_from_u64(seed)` and selects the independent keystream
//! `stream`. Splitting `(seed, s)` by index `i` yields
//! `(seed, splitmix64(s ^ splitmix64(i + 1)))` for `s ≠ 0` and `(seed, i + 1)`
//! for the root stream `s = 0`, so trial `i` of a run seeded with `seed`
//! reads keystream `i + 1`.
//!
//! Decoders on top of the uniform bits:
//! - `ℕ` (geometric, `μ{n} = 2^{-n-1}`): the number of 1-bits before the first 0-bit;
//! - `ℕ × 2^ℕ`: geometric natural from the even positions, Cantor point from the odd ones;
//! - `ℕ^ℕ`: the bit string read as `1^{n_0} 0 1^{n_1} 0 …`, i.e. digit-wise geometric.

use std::cell::RefCell;
use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AdviceSpace {
    /// `ℕ` with the geometric measure.
    Naturals,
    /// `ℕ` with counting measure; infinite total mass, so not samplable.
    NaturalsCounting,
    CantorSpace,
    NatTimesCantor,
    BaireSpace,
    /// Product of two spaces, realized on interleaved bits.
    Product(Box<AdviceSpace>, Box<AdviceSpace>),
}

impl AdviceSpace {
    pub fn is_samplable(&self) -> bool {
        match self {
            AdviceSpace::NaturalsCounting => false,
            AdviceSpace::Product(a, b) => a.is_samplable() && b.is_samplable(),
            _ => true,
        }
    }

    pub fn product(a: AdviceSpace, b: AdviceSpace) -> AdviceSpace {
        AdviceSpace::Product(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for AdviceSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdviceSpace::Naturals => write!(f, "N (geometric)"),
            AdviceSpace::NaturalsCounting => write!(f, "N (counting)"),
            AdviceSpace::CantorSpace => write!(f, "2^N"),
            AdviceSpace::NatTimesCantor => write!(f, "N x 2^N"),
            AdviceSpace::BaireSpace => write!(f, "N^N"),
            AdviceSpace::Product(a, b) => write!(f, "({a}) x ({b})"),
        }
    }
}

/// Random-access view of an advice bit sequence.
pub trait AdviceBits {
    fn bit(&self, index: usize) -> bool;

    fn prefix(&self, n: usize) -> Vec<bool> {
        (0..n).map(|i| self.bit(i)).collect()
    }
}

impl<T: AdviceBits + ?Sized> AdviceBits for &T {
    fn bit(&self, index: usize) -> bool {
        (**self).bit(index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdviceSeed {
    pub seed: u64,
    pub stream: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl AdviceSeed {
    pub fn new(seed: u64) -> Self {
        AdviceSeed { seed, stream: 0 }
    }

    /// Independent child seed number `index`.
    pub fn split(self, index: u64) -> Self {
        let stream = if self.stream == 0 {
            index.wrapping_add(1)
        } else {
            splitmix64(self.stream ^ splitmix64(index.wrapping_add(1)))
        };
        AdviceSeed {
            seed: self.seed,
            stream,
        }
    }
}

/// Lazily generated uniform bits, cached 64 at a time. Single consumer.
pub struct BitStream {
    rng: RefCell<ChaCha8Rng>,
    words: RefCell<Vec<u64>>,
    seed: AdviceSeed,
}

impl fmt::Debug for BitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BitStream").field("seed", &self.seed).finish()
    }
}

impl BitStream {
    pub fn new(seed: AdviceSeed) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.seed);
        rng.set_stream(seed.stream);
        BitStream {
            rng: RefCell::new(rng),
            words: RefCell::new(Vec::new()),
            seed,
        }
    }

    pub fn seed(&self) -> AdviceSeed {
        self.seed
    }
}

impl AdviceBits for BitStream {
    fn bit(&self, index: usize) -> bool {
        let w = index / 64;
        let mut words = self.words.borrow_mut();
        if words.len() <= w {
            let mut rng = self.rng.borrow_mut();
            while words.len() <= w {
                words.push(rng.next_u64());
            }
        }
        words[w] >> (index % 64) & 1 == 1
    }
}

/// A fixed advice: explicit prefix, then a tail rule.
pub struct FixedBits {
    prefix: Vec<bool>,
    tail: Box<dyn Fn(usize) -> bool + Send + Sync>,
}

impl fmt::Debug for FixedBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FixedBits").field("prefix", &self.prefix).finish()
    }
}

impl FixedBits {
    /// `prefix` followed by the constant `tail`.
    pub fn new(prefix: Vec<bool>, tail: bool) -> Self {
        FixedBits {
            prefix,
            tail: Box::new(move |_| tail),
        }
    }

    /// Parses a `0`/`1` string, followed by the constant `tail`.
    pub fn parse(word: &str, tail: bool) -> Result<Self> {
        let prefix = word
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse("advice bits", word)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(prefix, tail))
    }

    pub fn from_fn(f: impl Fn(usize) -> bool + Send + Sync + 'static) -> Self {
        FixedBits {
            prefix: Vec::new(),
            tail: Box::new(f),
        }
    }
}

impl AdviceBits for FixedBits {
    fn bit(&self, index: usize) -> bool {
        match self.prefix.get(index) {
            Some(b) => *b,
            None => (self.tail)(index),
        }
    }
}

/// Even (`parity = 0`) or odd (`parity = 1`) positions of another advice,
/// optionally shifted: `bit(i) = inner.bit(offset + 2i + parity)`.
#[derive(Clone, Copy)]
pub struct ProjectedBits<'a> {
    inner: &'a dyn AdviceBits,
    parity: usize,
    stride: usize,
    offset: usize,
}

impl<'a> ProjectedBits<'a> {
    pub fn left(inner: &'a dyn AdviceBits) -> Self {
        ProjectedBits {
            inner,
            parity: 0,
            stride: 2,
            offset: 0,
        }
    }

    pub fn right(inner: &'a dyn AdviceBits) -> Self {
        ProjectedBits {
            inner,
            parity: 1,
            stride: 2,
            offset: 0,
        }
    }

    /// The advice with its first `offset` bits dropped.
    pub fn shifted(inner: &'a dyn AdviceBits, offset: usize) -> Self {
        ProjectedBits {
            inner,
            parity: 0,
            stride: 1,
            offset,
        }
    }
}

impl AdviceBits for ProjectedBits<'_> {
    fn bit(&self, index: usize) -> bool {
        self.inner.bit(self.offset + self.stride * index + self.parity)
    }
}

/// Geometric natural starting at bit `start`: count of 1s before the first 0.
/// Returns the natural and the position after the terminating 0.
pub fn read_geometric(bits: &dyn AdviceBits, start: usize) -> (u64, usize) {
    let mut pos = start;
    while bits.bit(pos) {
        pos += 1;
    }
    ((pos - start) as u64, pos + 1)
}

/// Digits of a Baire-space advice decoded from `1^{n_0} 0 1^{n_1} 0 …`.
pub struct BaireDigits<'a> {
    bits: &'a dyn AdviceBits,
    pos: usize,
}

impl<'a> BaireDigits<'a> {
    pub fn new(bits: &'a dyn AdviceBits) -> Self {
        BaireDigits { bits, pos: 0 }
    }
}

impl Iterator for BaireDigits<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let (n, next) = read_geometric(self.bits, self.pos);
        self.pos = next;
        Some(n)
    }
}

/// A drawn advice: the raw uniform bits plus the space they are decoded into.
#[derive(Debug)]
pub struct AdviceSample {
    space: AdviceSpace,
    raw: BitStream,
}

impl AdviceSample {
    pub fn space(&self) -> &AdviceSpace {
        &self.space
    }

    pub fn raw(&self) -> &BitStream {
        &self.raw
    }

    /// The natural coordinate (for `Naturals` and `NatTimesCantor`).
    pub fn natural(&self) -> Option<u64> {
        match self.space {
            AdviceSpace::Naturals => Some(read_geometric(&self.raw, 0).0),
            AdviceSpace::NatTimesCantor => Some(read_geometric(&ProjectedBits::left(&self.raw), 0).0),
            _ => None,
        }
    }

    /// The Cantor coordinate (for `CantorSpace` and `NatTimesCantor`).
    pub fn cantor_prefix(&self, n: usize) -> Option<Vec<bool>> {
        match self.space {
            AdviceSpace::CantorSpace => Some(self.raw.prefix(n)),
            AdviceSpace::NatTimesCantor => Some(ProjectedBits::right(&self.raw).prefix(n)),
            _ => None,
        }
    }

    pub fn baire_prefix(&self, n: usize) -> Option<Vec<u64>> {
        match self.space {
            AdviceSpace::BaireSpace => Some(BaireDigits::new(&self.raw).take(n).collect()),
            _ => None,
        }
    }
}

/// Draws an advice from `space`, deterministically in `seed`.
pub fn advice_sample(space: &AdviceSpace, seed: AdviceSeed) -> Result<AdviceSample> {
    if !space.is_samplable() {
        return Err(Error::NonSamplable(space.to_string()));
    }
    Ok(AdviceSample {
        space: space.clone(),
        raw: BitStream::new(seed),
    })
}
