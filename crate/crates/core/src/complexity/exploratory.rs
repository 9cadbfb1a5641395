//! Measurements without proven bounds: subword complexity, block
//! frequencies and the correlation measure of order `k`.

use std::collections::HashSet;

use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

fn check_len(s: &BitSeq, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("block length must be positive".into()));
    }
    if n > s.len() {
        return Err(Error::InputTooShort {
            needed: n,
            available: s.len(),
        });
    }
    Ok(())
}

/// Number of distinct length-`n` factors of `s`.
pub fn subword_complexity(s: &BitSeq, n: usize) -> Result<usize> {
    check_len(s, n)?;
    let count = s.len() - n + 1;
    if n <= 24 {
        let mut seen = BitSeq::zeros(1 << n);
        let mut distinct = 0;
        for_each_window(s, n, |w| {
            if !seen.get(w as usize) {
                seen.set(w as usize, true);
                distinct += 1;
            }
        });
        Ok(distinct)
    } else if n <= 64 {
        let mut seen = HashSet::with_capacity(count);
        for_each_window(s, n, |w| {
            seen.insert(w);
        });
        Ok(seen.len())
    } else {
        let bytes = s.to_bytes();
        Ok(bytes.windows(n).collect::<HashSet<_>>().len())
    }
}

/// Calls `f` with every length-`n` window (n <= 64), most significant bit
/// first.
fn for_each_window(s: &BitSeq, n: usize, mut f: impl FnMut(u64)) {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut w = s.window(0, n);
    f(w);
    for end in n..s.len() {
        w = ((w << 1) | s.get(end) as u64) & mask;
        f(w);
    }
}

/// Sliding-window counts of each length-`n` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFrequencies {
    pub block_len: usize,
    /// `counts[b]` counts the block whose bits, read left to right, spell
    /// `b` in binary (so "01" is index 1).
    pub counts: Vec<u64>,
}

impl BlockFrequencies {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count(&self, block: &str) -> Option<u64> {
        if block.len() != self.block_len {
            return None;
        }
        let idx = u64::from_str_radix(block, 2).ok()?;
        self.counts.get(idx as usize).copied()
    }

    pub fn frequency(&self, block: &str) -> Option<f64> {
        Some(self.count(block)? as f64 / self.total() as f64)
    }
}

pub const MAX_BLOCK_LEN: usize = 16;

pub fn block_frequencies(s: &BitSeq, n: usize) -> Result<BlockFrequencies> {
    check_len(s, n)?;
    if n > MAX_BLOCK_LEN {
        return Err(Error::InvalidParameter(format!(
            "block length {n} exceeds {MAX_BLOCK_LEN}"
        )));
    }
    let mut counts = vec![0u64; 1 << n];
    for_each_window(s, n, |w| counts[w as usize] += 1);
    Ok(BlockFrequencies {
        block_len: n,
        counts,
    })
}

/// Largest correlation found and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correlation {
    pub value: u64,
    /// Lag tuple `d_1 < ... < d_k` attaining the value.
    pub lags: Vec<usize>,
    /// Window length `M` attaining the value.
    pub window: usize,
    /// Largest lag that was searched (the cap actually applied).
    pub max_lag: usize,
    /// Units of work spent (bits visited).
    pub work: u64,
}

pub const MAX_CORRELATION_ORDER: usize = 4;
pub const MAX_CORRELATION_LEN: usize = 10_000;
pub const DEFAULT_CORRELATION_WORK: u64 = 4_000_000_000;

/// Correlation measure of order `k` restricted to lags `<= max_lag`:
/// the maximum over `M` and `0 <= d_1 < ... < d_k` with `M + d_k <= N` of
/// `|sum_{t<M} (-1)^(s_{t+d_1} + ... + s_{t+d_k})|`.
pub fn correlation_measure(s: &BitSeq, n: usize, k: usize, max_lag: usize) -> Result<Correlation> {
    correlation_measure_capped(s, n, k, max_lag, DEFAULT_CORRELATION_WORK)
}

/// As [`correlation_measure`], failing with [`Error::BudgetExceeded`] (and
/// the partial maximum) once more than `work_cap` bits would be visited.
pub fn correlation_measure_capped(
    s: &BitSeq,
    n: usize,
    k: usize,
    max_lag: usize,
    work_cap: u64,
) -> Result<Correlation> {
    if !(1..=MAX_CORRELATION_ORDER).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "correlation order must be in 1..={MAX_CORRELATION_ORDER}, got {k}"
        )));
    }
    if n == 0 || n > MAX_CORRELATION_LEN {
        return Err(Error::InvalidParameter(format!(
            "correlation length must be in 1..={MAX_CORRELATION_LEN}, got {n}"
        )));
    }
    if n > s.len() {
        return Err(Error::InputTooShort {
            needed: n,
            available: s.len(),
        });
    }
    let max_lag = max_lag.min(n - 1);
    if k > max_lag + 1 {
        return Err(Error::InvalidParameter(format!(
            "order {k} needs at least {k} distinct lags, max lag is {max_lag}"
        )));
    }

    let table = byte_walk_table();
    let nw = n.div_ceil(64);
    // shifted[d] holds s_{t+d} for t < n - d
    let shifted: Vec<Vec<u64>> = (0..=max_lag).map(|d| shift_down(s.words(), d, nw)).collect();

    let mut best = Correlation {
        value: 0,
        lags: Vec::new(),
        window: 0,
        max_lag,
        work: 0,
    };
    let mut lags: Vec<usize> = (0..k).collect();
    let mut product = vec![0u64; nw];
    loop {
        let terms = n - lags[k - 1];
        if best.work + terms as u64 > work_cap {
            return Err(Error::BudgetExceeded {
                work: best.work,
                partial: best.value,
            });
        }
        product.copy_from_slice(&shifted[lags[0]]);
        for &d in &lags[1..] {
            for (p, w) in product.iter_mut().zip(&shifted[d]) {
                *p ^= w;
            }
        }
        let (value, window) = max_abs_partial_sum(&product, terms, &table);
        best.work += terms as u64;
        if value > best.value {
            best.value = value;
            best.window = window;
            best.lags = lags.clone();
        }
        if !next_combination(&mut lags, max_lag) {
            break;
        }
    }
    Ok(best)
}

/// Advances `lags` to the next strictly increasing tuple in `0..=max`.
fn next_combination(lags: &mut [usize], max: usize) -> bool {
    let k = lags.len();
    for pos in (0..k).rev() {
        if lags[pos] < max - (k - 1 - pos) {
            lags[pos] += 1;
            for t in pos + 1..k {
                lags[t] = lags[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn shift_down(words: &[u64], d: usize, nw: usize) -> Vec<u64> {
    let q = d / 64;
    let r = d % 64;
    (0..nw)
        .map(|i| {
            let lo = words.get(i + q).copied().unwrap_or(0);
            let hi = words.get(i + q + 1).copied().unwrap_or(0);
            if r == 0 {
                lo
            } else {
                (lo >> r) | (hi << (64 - r))
            }
        })
        .collect()
}

/// Per byte, reading bits LSB first as +1 (bit 0) or -1 (bit 1): the total,
/// and the minimum and maximum over the eight partial sums.
#[derive(Clone, Copy)]
struct ByteWalk {
    total: i8,
    min: i8,
    max: i8,
}

fn byte_walk_table() -> [ByteWalk; 256] {
    let mut table = [ByteWalk {
        total: 0,
        min: 0,
        max: 0,
    }; 256];
    for (b, entry) in table.iter_mut().enumerate() {
        let mut sum = 0i8;
        let (mut lo, mut hi) = (i8::MAX, i8::MIN);
        for bit in 0..8 {
            sum += if (b >> bit) & 1 == 1 { -1 } else { 1 };
            lo = lo.min(sum);
            hi = hi.max(sum);
        }
        *entry = ByteWalk {
            total: sum,
            min: lo,
            max: hi,
        };
    }
    table
}

/// Max over `1 <= M <= terms` of `|sum_{t<M} (-1)^{bit t}|`, and the first
/// `M` attaining it.
fn max_abs_partial_sum(bits: &[u64], terms: usize, table: &[ByteWalk; 256]) -> (u64, usize) {
    let mut sum = 0i64;
    let mut best = 0u64;
    let mut best_m = 0usize;
    let full_bytes = terms / 8;
    for byte_idx in 0..full_bytes {
        let byte = (bits[byte_idx / 8] >> (8 * (byte_idx % 8))) as u8;
        let walk = table[byte as usize];
        let reach = (sum + walk.max as i64).unsigned_abs().max((sum + walk.min as i64).unsigned_abs());
        if reach > best {
            // locate the first position inside this byte attaining it
            let mut s = sum;
            for bit in 0..8 {
                s += if (byte >> bit) & 1 == 1 { -1 } else { 1 };
                if s.unsigned_abs() == reach {
                    best = reach;
                    best_m = byte_idx * 8 + bit + 1;
                    break;
                }
            }
        }
        sum += walk.total as i64;
    }
    for t in full_bytes * 8..terms {
        sum += if (bits[t / 64] >> (t % 64)) & 1 == 1 { -1 } else { 1 };
        if sum.unsigned_abs() > best {
            best = sum.unsigned_abs();
            best_m = t + 1;
        }
    }
    (best, best_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{prefix, SequenceSpec};

    fn bits(s: &str) -> BitSeq {
        s.parse().unwrap()
    }

    /// Straight from the definition on unpacked bits.
    fn correlation_oracle(s: &BitSeq, n: usize, k: usize, max_lag: usize) -> u64 {
        let b = s.to_bytes();
        let max_lag = max_lag.min(n - 1);
        let mut best = 0u64;
        let mut lags: Vec<usize> = (0..k).collect();
        loop {
            let dk = lags[k - 1];
            for m in 1..=n - dk {
                let sum: i64 = (0..m)
                    .map(|t| {
                        let parity = lags.iter().fold(0u8, |acc, &d| acc ^ b[t + d]);
                        if parity == 1 { -1 } else { 1 }
                    })
                    .sum();
                best = best.max(sum.unsigned_abs());
            }
            if !next_combination(&mut lags, max_lag) {
                return best;
            }
        }
    }

    #[test]
    fn subword_examples() {
        let alt: BitSeq = (0..20).map(|i| i % 2 == 1).collect();
        assert_eq!(subword_complexity(&alt, 2).unwrap(), 2);
        let tm = prefix(&SequenceSpec::thue_morse(), 1 << 16).unwrap();
        assert_eq!(subword_complexity(&tm, 3).unwrap(), 6);
        assert_eq!(subword_complexity(&tm, 4).unwrap(), 10);
    }

    #[test]
    fn subword_large_windows() {
        let s: BitSeq = (0..400u64).map(|i| (i * i) % 13 < 6).collect();
        let bytes = s.to_bytes();
        for n in [30, 64, 70] {
            let brute = bytes.windows(n).collect::<HashSet<_>>().len();
            assert_eq!(subword_complexity(&s, n).unwrap(), brute);
        }
    }

    #[test]
    fn block_frequency_examples() {
        let f = block_frequencies(&bits("0000"), 1).unwrap();
        assert_eq!(f.counts, vec![4, 0]);
        let f = block_frequencies(&bits("0110"), 2).unwrap();
        assert_eq!(f.count("01"), Some(1));
        assert_eq!(f.count("11"), Some(1));
        assert_eq!(f.count("10"), Some(1));
        assert_eq!(f.count("00"), Some(0));
        assert_eq!(f.total(), 3);
        assert!(block_frequencies(&bits("0110"), 17).is_err());
    }

    #[test]
    fn correlation_all_zero() {
        let s = BitSeq::zeros(100);
        let c = correlation_measure(&s, 100, 1, 10).unwrap();
        assert_eq!(c.value, 100);
        assert_eq!(c.lags, vec![0]);
    }

    #[test]
    fn correlation_alternating_adjacent_lags() {
        let s: BitSeq = (0..50).map(|i| i % 2 == 1).collect();
        let c = correlation_measure(&s, 50, 2, 1).unwrap();
        assert_eq!(c.value, 49);
        assert_eq!(c.lags, vec![0, 1]);
    }

    #[test]
    fn correlation_matches_definition() {
        let s: BitSeq = (0..90u64).map(|i| (i * 7 + i * i) % 5 < 2).collect();
        for k in 1..=3 {
            for lag in [k - 1, 4, 12] {
                assert_eq!(
                    correlation_measure(&s, 90, k, lag).unwrap().value,
                    correlation_oracle(&s, 90, k, lag),
                    "k={k} lag={lag}"
                );
            }
        }
    }

    #[test]
    fn correlation_budget() {
        let s: BitSeq = (0..1000u64).map(|i| i % 3 == 0).collect();
        match correlation_measure_capped(&s, 1000, 2, 100, 10_000) {
            Err(Error::BudgetExceeded { work, partial }) => {
                assert!(work <= 10_000);
                assert!(partial > 0);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn correlation_parameter_checks() {
        let s = BitSeq::zeros(10);
        assert!(correlation_measure(&s, 10, 0, 3).is_err());
        assert!(correlation_measure(&s, 10, 5, 3).is_err());
        assert!(correlation_measure(&s, 10, 3, 1).is_err());
    }
}
