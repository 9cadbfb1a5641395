//! Maximum order complexity.
//!
//! Over F2 every map `F2^M -> F2` is a polynomial, so a feedback function of
//! order `M` exists for a prefix iff equal length-`M` windows always have the
//! same successor. A *conflict* of length `L` is a pair of equal length-`L`
//! windows with different successors; conflicts are closed under taking
//! suffixes, so the complexity is one more than the longest conflict.

use std::collections::HashMap;

use super::{ComplexityProfile, Measure};
use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// Two equal windows of length `window` starting at `first < second` whose
/// successor bits differ. Shows that order `window` is infeasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MocWitness {
    pub first: usize,
    pub second: usize,
    pub window: usize,
}

impl MocWitness {
    /// Checks the witness against the first `n` bits of `s`.
    pub fn replay(&self, s: &BitSeq, n: usize) -> bool {
        let w = self.window;
        self.first < self.second
            && self.second + w < n.min(s.len() + 1)
            && (0..w).all(|t| s.get(self.first + t) == s.get(self.second + t))
            && s.get(self.first + w) != s.get(self.second + w)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MocResult {
    pub value: usize,
    /// Conflict of length `value - 1`; absent only when `value == 0`.
    pub witness: Option<MocWitness>,
}

fn check_args(s: &BitSeq, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "maximum order complexity is undefined for N = 0".into(),
        ));
    }
    if n > s.len() {
        return Err(Error::InputTooShort {
            needed: n,
            available: s.len(),
        });
    }
    Ok(())
}

/// Value of the constant-prefix rule, if it applies: when `s_0..s_{N-2}`
/// all equal `a`, M is 0 if `s_{N-1} = a` and `N - 1` otherwise.
fn degenerate_value(s: &BitSeq, n: usize) -> Option<usize> {
    let a = s.get(0);
    if (1..n - 1).any(|i| s.get(i) != a) {
        return None;
    }
    Some(if s.get(n - 1) == a { 0 } else { n - 1 })
}

/// Brute-force maximum order complexity: tries `M = 1, 2, ...` and builds the
/// window -> successor map for each.
pub fn moc_naive(s: &BitSeq, n: usize) -> Result<MocResult> {
    check_args(s, n)?;
    let bytes = &s.to_bytes()[..n];
    if let Some(value) = degenerate_value(s, n) {
        let witness = (value > 0).then(|| find_conflict(bytes, value - 1).unwrap());
        return Ok(MocResult { value, witness });
    }
    let mut last = find_conflict(bytes, 0).expect("non-constant prefix has a length-0 conflict");
    let mut m = 1;
    while let Some(c) = find_conflict(bytes, m) {
        last = c;
        m += 1;
    }
    Ok(MocResult {
        value: m,
        witness: Some(last),
    })
}

/// First conflict of length `len` in scan order: the earliest `second`, and
/// for it the first occurrence of the window.
fn find_conflict(bytes: &[u8], len: usize) -> Option<MocWitness> {
    let n = bytes.len();
    if n <= len {
        return None;
    }
    let last_start = n - len - 1;
    let hit = |first: usize, second: usize| MocWitness {
        first,
        second,
        window: len,
    };
    if len <= 64 {
        let mut seen: HashMap<u64, usize> = HashMap::new();
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        let mut key = 0u64;
        for &b in &bytes[..len] {
            key = (key << 1) | b as u64;
        }
        for j in 0..=last_start {
            if j > 0 {
                key = ((key << 1) | bytes[j + len - 1] as u64) & mask;
            }
            match seen.get(&key) {
                Some(&i) if bytes[i + len] != bytes[j + len] => return Some(hit(i, j)),
                Some(_) => {}
                None => {
                    seen.insert(key, j);
                }
            }
        }
    } else {
        let mut seen: HashMap<&[u8], usize> = HashMap::new();
        for j in 0..=last_start {
            let w = &bytes[j..j + len];
            match seen.get(w) {
                Some(&i) if bytes[i + len] != bytes[j + len] => return Some(hit(i, j)),
                Some(_) => {}
                None => {
                    seen.insert(w, j);
                }
            }
        }
    }
    None
}

const NONE: u32 = u32::MAX;

/// Online maximum order complexity via a suffix automaton of the prefix.
///
/// A state with outgoing edges on both 0 and 1 means its longest string `w`
/// occurs followed by each bit, i.e. `w` is a conflict. Edges are never
/// removed, so the longest conflict only grows and is updated whenever a
/// state gains its second edge. Amortized `O(1)` per bit.
#[derive(Clone, Debug)]
pub struct MocTracker {
    next: Vec<[u32; 2]>,
    link: Vec<u32>,
    len: Vec<u32>,
    // end position of the first occurrence of the state's strings
    first_end: Vec<u32>,
    last: u32,
    n: usize,
    first_bit: bool,
    // index of the first bit differing from bit 0, if any
    first_change: Option<usize>,
    best: Option<MocWitness>,
}

impl Default for MocTracker {
    fn default() -> Self {
        Self::new()
    }
}

impl MocTracker {
    pub fn new() -> Self {
        MocTracker {
            next: vec![[NONE; 2]],
            link: vec![NONE],
            len: vec![0],
            first_end: vec![0],
            last: 0,
            n: 0,
            first_bit: false,
            first_change: None,
            best: None,
        }
    }

    pub fn with_capacity(bits: usize) -> Self {
        let mut t = Self::new();
        let states = 2 * bits + 1;
        t.next.reserve(states);
        t.link.reserve(states);
        t.len.reserve(states);
        t.first_end.reserve(states);
        t
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Longest conflict seen so far.
    pub fn longest_conflict(&self) -> Option<MocWitness> {
        self.best
    }

    pub fn push(&mut self, bit: bool) {
        let c = bit as usize;
        let pos = self.n as u32;
        if self.n == 0 {
            self.first_bit = bit;
        } else if self.first_change.is_none() && bit != self.first_bit {
            self.first_change = Some(self.n);
        }
        self.n += 1;

        let cur = self.new_state(self.len[self.last as usize] + 1, [NONE; 2], NONE, pos);
        let mut p = self.last;
        while p != NONE && self.next[p as usize][c] == NONE {
            self.next[p as usize][c] = cur;
            self.on_new_edge(p);
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.next[p as usize][c];
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone = self.new_state(
                    self.len[p as usize] + 1,
                    self.next[q as usize],
                    self.link[q as usize],
                    self.first_end[q as usize],
                );
                while p != NONE && self.next[p as usize][c] == q {
                    self.next[p as usize][c] = clone;
                    p = self.link[p as usize];
                }
                self.link[q as usize] = clone;
                self.link[cur as usize] = clone;
            }
        }
        self.last = cur;
    }

    fn new_state(&mut self, len: u32, next: [u32; 2], link: u32, first_end: u32) -> u32 {
        self.next.push(next);
        self.link.push(link);
        self.len.push(len);
        self.first_end.push(first_end);
        (self.next.len() - 1) as u32
    }

    fn on_new_edge(&mut self, p: u32) {
        let [e0, e1] = self.next[p as usize];
        if e0 == NONE || e1 == NONE {
            return;
        }
        let l = self.len[p as usize] as usize;
        if self.best.is_some_and(|b| b.window >= l) {
            return;
        }
        let a = self.first_end[e0 as usize] as usize - l;
        let b = self.first_end[e1 as usize] as usize - l;
        self.best = Some(MocWitness {
            first: a.min(b),
            second: a.max(b),
            window: l,
        });
    }

    /// Maximum order complexity of everything pushed so far.
    pub fn result(&self) -> MocResult {
        assert!(self.n > 0, "maximum order complexity is undefined for N = 0");
        // constant-prefix rule first
        let Some(change) = self.first_change else {
            return MocResult {
                value: 0,
                witness: None,
            };
        };
        let w = self.best.expect("non-constant prefix has a conflict");
        let value = if change == self.n - 1 {
            self.n - 1
        } else {
            w.window + 1
        };
        debug_assert_eq!(value, w.window + 1);
        MocResult {
            value,
            witness: Some(w),
        }
    }
}

/// Maximum order complexity of the first `n` bits using [`MocTracker`].
pub fn moc_fast(s: &BitSeq, n: usize) -> Result<MocResult> {
    check_args(s, n)?;
    let mut t = MocTracker::with_capacity(n);
    for i in 0..n {
        t.push(s.get(i));
    }
    Ok(t.result())
}

/// `(N, M(s, N))` for every `1 <= N <= nmax`, from one online pass.
pub fn moc_profile(s: &BitSeq, nmax: usize) -> Result<ComplexityProfile> {
    if nmax > s.len() {
        return Err(Error::InputTooShort {
            needed: nmax,
            available: s.len(),
        });
    }
    let mut t = MocTracker::with_capacity(nmax);
    let mut points = Vec::with_capacity(nmax);
    for i in 0..nmax {
        t.push(s.get(i));
        points.push((i + 1, t.result().value as u64));
    }
    Ok(ComplexityProfile {
        measure: Measure::Moc,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitSeq {
        s.parse().unwrap()
    }

    #[test]
    fn constant_prefix_rule() {
        let r = moc_naive(&bits("00000"), 5).unwrap();
        assert_eq!(r, MocResult { value: 0, witness: None });
        assert_eq!(moc_fast(&bits("00000"), 5).unwrap().value, 0);

        let r = moc_naive(&bits("00001"), 5).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.witness.unwrap().replay(&bits("00001"), 5));
        let f = moc_fast(&bits("00001"), 5).unwrap();
        assert_eq!(f.value, 4);
        assert!(f.witness.unwrap().replay(&bits("00001"), 5));
    }

    #[test]
    fn single_bit_is_zero() {
        for s in ["0", "1"] {
            assert_eq!(moc_naive(&bits(s), 1).unwrap().value, 0);
            assert_eq!(moc_fast(&bits(s), 1).unwrap().value, 0);
        }
    }

    #[test]
    fn shortest_nondegenerate() {
        assert_eq!(moc_naive(&bits("01"), 2).unwrap().value, 1);
        assert_eq!(moc_fast(&bits("01"), 2).unwrap().value, 1);
    }

    #[test]
    fn thue_morse_eight() {
        let tm = bits("01101001");
        let r = moc_naive(&tm, 8).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(
            r.witness,
            Some(MocWitness {
                first: 0,
                second: 3,
                window: 2
            })
        );
        let f = moc_fast(&tm, 8).unwrap();
        assert_eq!(f.value, 3);
        assert!(f.witness.unwrap().replay(&tm, 8));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            moc_naive(&bits("01"), 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            moc_fast(&bits("01"), 3),
            Err(Error::InputTooShort { .. })
        ));
    }

    #[test]
    fn profile_of_constant_sequence() {
        let p = moc_profile(&BitSeq::zeros(5), 5).unwrap();
        assert_eq!(p.values(), vec![0; 5]);
    }

    #[test]
    fn profile_matches_pointwise() {
        let s: BitSeq = (0..300u64).map(|i| (i * i * 7 + i / 3) % 11 < 5).collect();
        let p = moc_profile(&s, 300).unwrap();
        for &(n, v) in &p.points {
            assert_eq!(moc_naive(&s, n).unwrap().value as u64, v, "N = {n}");
        }
        assert!(p.is_non_decreasing());
    }

    #[test]
    fn long_windows_use_slice_keys() {
        // a^70 b: conflict of length 69
        let mut s = BitSeq::zeros(70);
        s.push(true);
        assert_eq!(moc_naive(&s, 71).unwrap().value, 70);
        let mut s: BitSeq = (0..80).map(|i| i % 2 == 1).collect();
        s.push(true);
        s.push(false);
        let naive = moc_naive(&s, 82).unwrap();
        assert_eq!(naive.value, moc_fast(&s, 82).unwrap().value);
        assert!(naive.value > 65);
    }
}
