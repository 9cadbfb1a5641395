//! Exact arithmetic over F2: truncated power series, bivariate polynomials
//! and kernel search for small dense matrices.
//!
//! Everything here is immutable once built and cheap to share between
//! threads.

mod bivariate;
mod matrix;
mod series;

pub use bivariate::{F2Bivariate, PowerCache};
pub use matrix::F2Matrix;
pub use series::F2Series;

use crate::bitseq::BitSeq;
use crate::error::Result;

/// Generating function of the first `n` terms of `s`.
pub fn series_from_bitseq(s: &BitSeq, n: usize) -> Result<F2Series> {
    F2Series::from_bitseq(s, n)
}

pub fn series_mul(a: &F2Series, b: &F2Series) -> Result<F2Series> {
    a.mul(b)
}

/// `h(x, g(x)) mod x^N`.
pub fn eval_bivariate(h: &F2Bivariate, g: &F2Series) -> Result<F2Series> {
    h.eval(g)
}

pub fn kernel_vector(m: &F2Matrix) -> Option<BitSeq> {
    m.kernel_vector()
}
