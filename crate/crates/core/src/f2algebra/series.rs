use std::fmt;

use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// A formal power series over F2 truncated modulo `x^N`.
///
/// Coefficient of `x^i` is bit `i` of the packed coefficient string. The
/// coefficient string always has exactly `N` bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Series {
    coeffs: BitSeq,
}

impl F2Series {
    pub fn zero(truncation: usize) -> Self {
        F2Series {
            coeffs: BitSeq::zeros(truncation),
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if truncation > 0 {
            s.coeffs.set(0, true);
        }
        s
    }

    /// `x^i mod x^N`.
    pub fn monomial(i: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if i < truncation {
            s.coeffs.set(i, true);
        }
        s
    }

    /// Generating function `sum s_i x^i` of the first `n` terms of `s`.
    pub fn from_bitseq(s: &BitSeq, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "series truncation must be positive".into(),
            ));
        }
        Ok(F2Series {
            coeffs: s.prefix(n)?,
        })
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &BitSeq {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn check_same(&self, other: &F2Series) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &F2Series) -> Result<F2Series> {
        self.check_same(other)?;
        let words = self
            .coeffs
            .words()
            .iter()
            .zip(other.coeffs.words())
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(F2Series {
            coeffs: BitSeq::from_words(words, self.truncation()),
        })
    }

    /// Truncated Cauchy product. Each set coefficient of the sparser operand
    /// contributes one shifted copy of the other, XORed in word by word.
    pub fn mul(&self, other: &F2Series) -> Result<F2Series> {
        self.check_same(other)?;
        let n = self.truncation();
        let (sparse, dense) = if self.coeffs.count_ones() <= other.coeffs.count_ones() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = vec![0u64; n.div_ceil(64)];
        for (wi, &word) in sparse.coeffs.words().iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                xor_shifted(&mut acc, dense.coeffs.words(), wi * 64 + bit);
            }
        }
        Ok(F2Series {
            coeffs: BitSeq::from_words(acc, n),
        })
    }

    /// Multiplication by `x^shift`, truncated.
    pub fn shift_up(&self, shift: usize) -> F2Series {
        let n = self.truncation();
        let mut acc = vec![0u64; n.div_ceil(64)];
        xor_shifted(&mut acc, self.coeffs.words(), shift);
        F2Series {
            coeffs: BitSeq::from_words(acc, n),
        }
    }
}

/// `acc ^= src << shift`, dropping words that fall past the end of `acc`.
fn xor_shifted(acc: &mut [u64], src: &[u64], shift: usize) {
    let q = shift / 64;
    let r = shift % 64;
    if q >= acc.len() {
        return;
    }
    let span = acc.len() - q;
    if r == 0 {
        for (a, s) in acc[q..].iter_mut().zip(src.iter().take(span)) {
            *a ^= s;
        }
    } else {
        let mut carry = 0u64;
        for (a, &s) in acc[q..].iter_mut().zip(src.iter().chain(std::iter::repeat(&0))) {
            *a ^= (s << r) | carry;
            carry = s >> (64 - r);
        }
    }
}

impl fmt::Debug for F2Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Series[mod x^{}](", self.truncation())?;
        let mut first = true;
        for (i, b) in self.coeffs.iter().enumerate() {
            if b {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                match i {
                    0 => f.write_str("1")?,
                    1 => f.write_str("x")?,
                    _ => write!(f, "x^{i}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(bits: &str) -> F2Series {
        let s: BitSeq = bits.parse().unwrap();
        F2Series::from_bitseq(&s, s.len()).unwrap()
    }

    /// Schoolbook convolution on unpacked bits.
    fn convolve(a: &F2Series, b: &F2Series) -> Vec<bool> {
        let n = a.truncation();
        (0..n)
            .map(|k| (0..=k).fold(false, |acc, i| acc ^ (a.coeff(i) & b.coeff(k - i))))
            .collect()
    }

    #[test]
    fn from_bitseq_examples() {
        let tm: BitSeq = "0110".parse().unwrap();
        let g = F2Series::from_bitseq(&tm, 4).unwrap();
        assert_eq!(g.coeffs().to_string(), "0110");

        let z = F2Series::from_bitseq(&BitSeq::zeros(8), 8).unwrap();
        assert!(z.is_zero());

        let one = F2Series::from_bitseq(&"1000".parse().unwrap(), 1).unwrap();
        assert_eq!(one, F2Series::one(1));
    }

    #[test]
    fn from_bitseq_too_short() {
        let err = F2Series::from_bitseq(&BitSeq::zeros(3), 4).unwrap_err();
        assert!(matches!(err, Error::InputTooShort { .. }));
    }

    #[test]
    fn square_of_one_plus_x() {
        let a = series("110");
        assert_eq!(a.mul(&a).unwrap(), series("101"));
    }

    #[test]
    fn zero_absorbs() {
        let a = series("1011001110");
        assert!(a.mul(&F2Series::zero(10)).unwrap().is_zero());
    }

    #[test]
    fn mismatched_truncation() {
        let err = series("10").mul(&series("100")).unwrap_err();
        assert_eq!(err, Error::TruncationMismatch { left: 2, right: 3 });
    }

    #[test]
    fn thue_morse_square_is_frobenius() {
        // t = 01101001, G^2 mod x^8 has t_i at x^{2i} and zeros at odd powers.
        let g = series("01101001");
        let sq = g.mul(&g).unwrap();
        assert_eq!(sq.coeffs().to_string(), "00101000");
        let direct = convolve(&g, &g);
        assert_eq!(sq.coeffs().iter().collect::<Vec<_>>(), direct);
    }

    #[test]
    fn matches_convolution_across_words() {
        let a: BitSeq = (0..200).map(|i| (i * 7 + 3) % 5 < 2).collect();
        let b: BitSeq = (0..200).map(|i| (i * i) % 3 == 1).collect();
        let a = F2Series::from_bitseq(&a, 200).unwrap();
        let b = F2Series::from_bitseq(&b, 200).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeffs().iter().collect::<Vec<_>>(), convolve(&a, &b));
    }

    #[test]
    fn shift_up_truncates() {
        let a = series("11000001");
        assert_eq!(a.shift_up(1).coeffs().to_string(), "01100000");
        assert!(a.shift_up(8).is_zero());
    }
}
