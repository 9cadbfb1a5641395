//! Linear complexity by Berlekamp-Massey over F2 with bit-packed
//! connection polynomials.

use super::{ComplexityProfile, Measure};
use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// Output of a Berlekamp-Massey run over the first `n` bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lfsr {
    /// Linear complexity of the full prefix.
    pub length: usize,
    /// Connection polynomial `1 + c_1 x + ... + c_L x^L`, bit `i` is `c_i`.
    pub connection: BitSeq,
    /// Linear complexity of each prefix `s_0..s_{m-1}` for `m = 1..=n`.
    pub profile: Vec<usize>,
}

impl Lfsr {
    /// Whether `s_t = sum c_i s_{t-i}` holds for `length <= t < n`.
    pub fn generates(&self, s: &BitSeq, n: usize) -> bool {
        (self.length..n).all(|t| {
            let feedback = (1..=self.length)
                .filter(|&i| self.connection.get(i))
                .fold(false, |acc, i| acc ^ s.get(t - i));
            feedback == s.get(t)
        })
    }
}

/// Bits `s[start..start + 64]` in reverse order (bit `b` of the result is
/// `s[start + 63 - b]`); positions outside the sequence read as zero.
#[inline]
fn reversed_word(words: &[u64], start: isize) -> u64 {
    let read = |w: isize| -> u64 {
        if w < 0 || w as usize >= words.len() {
            0
        } else {
            words[w as usize]
        }
    };
    let q = start.div_euclid(64);
    let r = start.rem_euclid(64) as u32;
    let lo = read(q) >> r;
    let hi = if r == 0 { 0 } else { read(q + 1) << (64 - r) };
    (lo | hi).reverse_bits()
}

fn xor_shifted(acc: &mut [u64], src: &[u64], shift: usize) {
    let q = shift / 64;
    let r = shift % 64;
    let mut carry = 0u64;
    for (k, &s) in src.iter().enumerate() {
        if q + k >= acc.len() {
            return;
        }
        if r == 0 {
            acc[q + k] ^= s;
        } else {
            acc[q + k] ^= (s << r) | carry;
            carry = s >> (64 - r);
        }
    }
    if r != 0 && q + src.len() < acc.len() {
        acc[q + src.len()] ^= carry;
    }
}

/// Berlekamp-Massey on the first `n` bits of `s`.
pub fn berlekamp_massey(s: &BitSeq, n: usize) -> Result<Lfsr> {
    if n > s.len() {
        return Err(Error::InputTooShort {
            needed: n,
            available: s.len(),
        });
    }
    let words = s.words();
    let nw = (n + 1).div_ceil(64) + 1;
    let mut conn = vec![0u64; nw];
    let mut prev = vec![0u64; nw];
    conn[0] = 1;
    prev[0] = 1;
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut profile = Vec::with_capacity(n);

    for t in 0..n {
        // d = sum_{i=0}^{len} c_i s_{t-i}; word k of conn pairs with
        // s_{t-64k-63..=t-64k} read backwards
        let used = len / 64 + 1;
        let mut acc = 0u64;
        for (k, &c) in conn[..used].iter().enumerate() {
            acc ^= c & reversed_word(words, t as isize - 64 * k as isize - 63);
        }
        if acc.count_ones() & 1 == 1 {
            if 2 * len <= t {
                let old = conn.clone();
                xor_shifted(&mut conn, &prev, shift);
                prev = old;
                len = t + 1 - len;
                shift = 1;
            } else {
                xor_shifted(&mut conn, &prev, shift);
                shift += 1;
            }
        } else {
            shift += 1;
        }
        profile.push(len);
    }

    Ok(Lfsr {
        length: len,
        connection: BitSeq::from_words(conn, len + 1),
        profile,
    })
}

/// Length of the shortest linear recurrence over F2 generating the first
/// `n` bits; 0 for an all-zero prefix.
pub fn linear_complexity(s: &BitSeq, n: usize) -> Result<usize> {
    Ok(berlekamp_massey(s, n)?.length)
}

/// `(N, L(s, N))` for `1 <= N <= nmax` from a single run.
pub fn linear_complexity_profile(s: &BitSeq, nmax: usize) -> Result<ComplexityProfile> {
    let lfsr = berlekamp_massey(s, nmax)?;
    Ok(ComplexityProfile {
        measure: Measure::LinearComplexity,
        points: lfsr
            .profile
            .iter()
            .enumerate()
            .map(|(i, &l)| (i + 1, l as u64))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitSeq {
        s.parse().unwrap()
    }

    #[test]
    fn all_zero() {
        for n in [1, 5, 130] {
            assert_eq!(linear_complexity(&BitSeq::zeros(n), n).unwrap(), 0);
        }
    }

    #[test]
    fn impulse_at_end() {
        for n in [1, 2, 7, 64, 65, 200] {
            let mut s = BitSeq::zeros(n - 1);
            s.push(true);
            assert_eq!(linear_complexity(&s, n).unwrap(), n);
        }
    }

    #[test]
    fn m_sequence() {
        // x^4 + x + 1: period 15, linear complexity 4
        let mut s = bits("0001");
        for t in 4..60 {
            let b = s.get(t - 3) ^ s.get(t - 4);
            s.push(b);
        }
        let lfsr = berlekamp_massey(&s, 60).unwrap();
        assert_eq!(lfsr.length, 4);
        assert!(lfsr.generates(&s, 60));
    }

    #[test]
    fn alternating() {
        assert_eq!(linear_complexity(&bits("0101010101"), 10).unwrap(), 2);
        assert_eq!(linear_complexity(&bits("1111"), 4).unwrap(), 1);
    }

    #[test]
    fn profile_matches_pointwise() {
        let s: BitSeq = (0..300u64).map(|i| (i * i + 3 * i) % 7 < 3).collect();
        let p = linear_complexity_profile(&s, 300).unwrap();
        for &(n, l) in p.points.iter().step_by(17) {
            assert_eq!(linear_complexity(&s, n).unwrap() as u64, l);
        }
        let full = berlekamp_massey(&s, 300).unwrap();
        assert!(full.generates(&s, 300));
    }

    #[test]
    fn too_short() {
        assert!(linear_complexity(&bits("01"), 3).is_err());
    }
}
