//! Finite bit strings over F2, packed 64 to a word.
//!
//! Bit `i` lives in word `i / 64` at position `i % 64` (least significant
//! bit first). Bits beyond `len` in the last word are always zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSeq {
    words: Vec<u64>,
    len: usize,
}

impl BitSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitSeq {
            words: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    pub fn zeros(len: usize) -> Self {
        BitSeq {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut s = BitSeq {
            words: vec![u64::MAX; len.div_ceil(64)],
            len,
        };
        s.clear_tail();
        s
    }

    /// Builds a sequence from packed words, discarding bits past `len`.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        let mut s = BitSeq { words, len };
        s.clear_tail();
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i & 63);
        if bit {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len & 63 == 0 {
            self.words.push(0);
        }
        if bit {
            self.words[self.len >> 6] |= 1 << (self.len & 63);
        }
        self.len += 1;
    }

    /// The first `n` bits, or an error if the sequence is shorter.
    pub fn prefix(&self, n: usize) -> Result<BitSeq> {
        if n > self.len {
            return Err(Error::InputTooShort {
                needed: n,
                available: self.len,
            });
        }
        Ok(BitSeq::from_words(self.words[..n.div_ceil(64)].to_vec(), n))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// One byte (0 or 1) per bit; handy for window-based algorithms.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Bits `start..start + width` (width <= 64) as an integer whose most
    /// significant bit is the bit at `start`.
    pub fn window(&self, start: usize, width: usize) -> u64 {
        debug_assert!(width <= 64 && start + width <= self.len);
        (start..start + width).fold(0u64, |acc, i| (acc << 1) | self.get(i) as u64)
    }

    /// Bit-string text form: ASCII `0`/`1` terminated by a newline.
    pub fn to_text(&self) -> String {
        let mut out = self.to_string();
        out.push('\n');
        out
    }

    /// Parses the bit-string text form. Surrounding whitespace (including the
    /// trailing newline) is ignored; any other character is an error.
    pub fn from_text(text: &str) -> Result<BitSeq> {
        text.trim().parse()
    }

    fn clear_tail(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl FromIterator<bool> for BitSeq {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let iter = iter.into_iter();
        let mut s = BitSeq::with_capacity(iter.size_hint().0);
        for b in iter {
            s.push(b);
        }
        s
    }
}

impl FromStr for BitSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} at position {pos} in bit string"
                ))),
            })
            .collect()
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSeq({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_and_get_across_word_boundary() {
        let s: BitSeq = (0..130).map(|i| i % 3 == 0).collect();
        assert_eq!(s.len(), 130);
        assert!(s.get(129));
        assert!(!s.get(128));
        assert_eq!(s.count_ones(), 44);
    }

    #[test]
    fn text_format() {
        let s: BitSeq = "0110".parse().unwrap();
        assert_eq!(s.to_text(), "0110\n");
        assert_eq!(BitSeq::from_text("0110\n").unwrap(), s);
        assert_eq!(BitSeq::from_text("\n").unwrap(), BitSeq::new());
        assert!(matches!(BitSeq::from_text("01x"), Err(Error::Parse(_))));
    }

    #[test]
    fn prefix_too_long() {
        let s = BitSeq::zeros(3);
        assert_eq!(
            s.prefix(4),
            Err(Error::InputTooShort {
                needed: 4,
                available: 3
            })
        );
        assert_eq!(s.prefix(2).unwrap().len(), 2);
    }

    #[test]
    fn ones_clears_tail() {
        let s = BitSeq::ones(70);
        assert_eq!(s.count_ones(), 70);
        assert_eq!(s.words()[1], 0b11_1111);
    }

    #[test]
    fn window_is_msb_first() {
        let s: BitSeq = "00110".parse().unwrap();
        assert_eq!(s.window(1, 3), 0b011);
    }
}
