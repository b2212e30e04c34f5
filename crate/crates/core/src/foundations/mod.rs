//! Exact arithmetic, stream representations, Sierpiński observation cells,
//! pairing functions and seeded advice sampling.

mod advice;
mod dyadic;
mod pairing;
mod sierpinski;
mod stream;

pub use advice::{
    advice_sample, read_geometric, AdviceBits, AdviceSample, AdviceSeed, AdviceSpace, BaireDigits, BitStream,
    FixedBits, ProjectedBits,
};
pub use dyadic::Dyadic;
pub use pairing::{cantor_pair, cantor_unpair, interleave, interleave_with, project_left, project_right};
pub use sierpinski::{sierp_observe, Observation, SierpinskiCell};
pub use stream::{binary_cylinder, sds_approx, sds_from_rational, BinaryName, Digit, SignedDigitStream};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps the fraction reduced with a positive denominator and
/// displays as `p/q` (or `p` for integers), which is the wire format.
pub type Rational = BigRational;

/// Parses `p/q` or an integer `p`. Rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| Error::parse("rational", s))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::parse("rational", s))?;
            if q.is_zero() {
                return Err(Error::parse("rational", s));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse::<BigInt>().map_err(|_| Error::parse("rational", s))?),
    };
    Ok(parsed)
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `2^-n` as a rational.
pub fn pow2_neg(n: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << n as usize)
}

/// Maximum number of primitive steps an operation may take.
///
/// One step is one digit or bit consumed or emitted by a transducer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RunBudget(pub u64);

impl RunBudget {
    pub const DEFAULT: RunBudget = RunBudget(1_000_000);

    pub fn fuel(self) -> u64 {
        self.0
    }
}

impl Default for RunBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_wire_format() {
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(rat(3, 4).to_string(), "3/4");
        assert_eq!(rat(0, 5).to_string(), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }
}
