//! Las Vegas computation over infinite objects.
//!
//! The crate is organised bottom-up:
//!
//! - [`foundations`]: exact dyadic/rational arithmetic, signed-digit and binary
//!   streams, pairing functions, Sierpiński observation cells and seeded
//!   advice sampling.
//! - [`sets`]: closed sets given by negative information (co-trees on Cantor
//!   space, co-enumerated subsets of the unit interval), their measures, the
//!   Smith-Volterra-Cantor embedding and the amplification product.
//! - [`choice`]: the choice operators as procedures (WWKL path sampling,
//!   mind-change search on naturals, Lebesgue density search, interval
//!   encoding, majority vote).
//! - [`engine`]: Las Vegas machines (compute transducer + failure monitor),
//!   fuel-bounded runs, restart loops, success estimation and composition.
//! - [`apps`]: robust division, all-or-unique choice, bimatrix Nash
//!   equilibria and intermediate-value zero finding.
//! - [`formats`]: the JSON schemas shared with the command-line driver.

pub mod apps;
pub mod choice;
pub mod engine;
pub mod error;
pub mod formats;
pub mod foundations;
pub mod sets;

pub use error::{Error, Result};
pub use foundations::{Dyadic, Rational, RunBudget};
