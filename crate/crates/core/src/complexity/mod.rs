//! Complexity measures of finite binary sequences.

mod expansion;
mod exploratory;
mod linear;
mod moc;

use std::fmt;

pub use expansion::{default_dmax, expansion_complexity, expansion_profile, EcResult};
pub use exploratory::{
    block_frequencies, correlation_measure, correlation_measure_capped, subword_complexity,
    BlockFrequencies, Correlation, DEFAULT_CORRELATION_WORK, MAX_BLOCK_LEN,
    MAX_CORRELATION_LEN, MAX_CORRELATION_ORDER,
};
pub use linear::{berlekamp_massey, linear_complexity, linear_complexity_profile, Lfsr};
pub use moc::{moc_fast, moc_naive, moc_profile, MocResult, MocTracker, MocWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    Moc,
    LinearComplexity,
    ExpansionComplexity,
    Subword,
    Correlation,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Moc => "moc",
            Measure::LinearComplexity => "lc",
            Measure::ExpansionComplexity => "ec",
            Measure::Subword => "subword",
            Measure::Correlation => "corr",
        })
    }
}

/// Values of one measure at increasing prefix lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub measure: Measure,
    /// `(N, value)` pairs, strictly increasing in `N`.
    pub points: Vec<(usize, u64)>,
}

impl ComplexityProfile {
    pub fn values(&self) -> Vec<u64> {
        self.points.iter().map(|&(_, v)| v).collect()
    }

    pub fn value_at(&self, n: usize) -> Option<u64> {
        self.points
            .binary_search_by_key(&n, |&(m, _)| m)
            .ok()
            .map(|i| self.points[i].1)
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[0].1 <= w[1].1)
    }
}
