use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite binary word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<bool>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn is_prefix_of(&self, w: &[bool]) -> bool {
        w.starts_with(&self.0)
    }

    pub fn child(&self, bit: bool) -> Word {
        let mut v = self.0.clone();
        v.push(bit);
        Word(v)
    }

    pub fn concat(&self, tail: &[bool]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        Word(v)
    }

    /// Word of length `len` spelling `bits` in binary, most significant bit first.
    pub fn from_index(bits: u64, len: usize) -> Word {
        Word((0..len).map(|i| bits >> (len - 1 - i) & 1 == 1).collect())
    }

    /// All `2^len` words of length `len` in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64, "word length {len} too large to enumerate");
        (0..1u64 << len).map(move |b| Word::from_index(b, len))
    }

    /// The `i`-th word in length-lexicographic order (`e, 0, 1, 00, 01, …`).
    pub fn length_lex(i: u64) -> Word {
        // words of length n occupy indices 2^n - 1 .. 2^{n+1} - 2
        let n = 63 - (i + 1).leading_zeros() as usize;
        Word::from_index(i + 1 - (1u64 << n), n)
    }
}

impl From<Vec<bool>> for Word {
    fn from(v: Vec<bool>) -> Self {
        Word(v)
    }
}

impl From<&[bool]> for Word {
    fn from(v: &[bool]) -> Self {
        Word(v.to_vec())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse("binary word", s)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
