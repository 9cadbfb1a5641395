//! Automatic sequences (Thue-Morse, pattern sequences such as Rudin-Shapiro)
//! sampled along integer polynomials, and the complexity measures used to
//! judge their unpredictability: maximum order complexity, linear
//! complexity, expansion complexity, subword complexity, block frequencies
//! and the correlation measure.
//!
//! The [`verification`] module turns the known lower bounds for the
//! subsequences along the squares into executable checks.

pub mod bitseq;
pub mod cli;
pub mod complexity;
pub mod error;
pub mod f2algebra;
pub mod sequences;
pub mod verification;

pub use bitseq::BitSeq;
pub use error::{Error, Result};
pub use sequences::{prefix, term, BigIndex, Family, IndexPoly, SequenceSpec};
