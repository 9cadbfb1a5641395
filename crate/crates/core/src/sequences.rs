//! Thue-Morse and pattern sequences, and their subsequences along integer
//! polynomials.
//!
//! Terms are computed by counting digit blocks in the binary expansion of
//! the (possibly huge) index, so `term` never unrolls the recursive
//! definition and costs `O(bit length)`.

use std::fmt;
use std::ops::{Add, Mul, Shl, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// Exact nonnegative integer used as a sequence index.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigIndex(BigUint);

impl BigIndex {
    pub fn zero() -> Self {
        BigIndex(BigUint::zero())
    }

    /// `2^e`.
    pub fn pow2(e: u32) -> Self {
        BigIndex(BigUint::one() << e)
    }

    pub fn square(&self) -> Self {
        BigIndex(&self.0 * &self.0)
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn trailing_zeros(&self) -> Option<u64> {
        self.0.trailing_zeros()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }
}

impl From<u64> for BigIndex {
    fn from(v: u64) -> Self {
        BigIndex(BigUint::from(v))
    }
}

impl From<u128> for BigIndex {
    fn from(v: u128) -> Self {
        BigIndex(BigUint::from(v))
    }
}

impl From<BigUint> for BigIndex {
    fn from(v: BigUint) -> Self {
        BigIndex(v)
    }
}

impl fmt::Display for BigIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for BigIndex {
            type Output = BigIndex;
            fn $m(self, rhs: BigIndex) -> BigIndex {
                BigIndex($tr::$m(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a BigIndex> for &'a BigIndex {
            type Output = BigIndex;
            fn $m(self, rhs: &'a BigIndex) -> BigIndex {
                BigIndex($tr::$m(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Mul, mul);
// panics on underflow, like BigUint
forward_binop!(Sub, sub);

impl Shl<u32> for BigIndex {
    type Output = BigIndex;
    fn shl(self, rhs: u32) -> BigIndex {
        BigIndex(self.0 << rhs)
    }
}

/// Number of ones in the binary expansion of `n`.
pub fn ones_count(n: &BigIndex) -> u64 {
    n.0.count_ones()
}

/// Number of (overlapping) occurrences of the block `1^k` in the binary
/// expansion of `n`, without leading zeros. `k = 1` is [`ones_count`].
pub fn pattern_count(n: &BigIndex, k: u32) -> u64 {
    assert!(k >= 1, "pattern length must be positive");
    // bit p of the mask is set iff bits p..p+k of n are all ones
    let mut mask = n.0.clone();
    for j in 1..k {
        mask &= &n.0 >> j;
    }
    mask.count_ones()
}

/// [`pattern_count`] for indices that fit in 128 bits.
#[inline]
pub fn pattern_count_u128(n: u128, k: u32) -> u32 {
    assert!(k >= 1, "pattern length must be positive");
    let mut mask = n;
    for j in 1..k.min(128) {
        mask &= n >> j;
    }
    if k > 128 {
        0
    } else {
        mask.count_ones()
    }
}

/// Which parent sequence to sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    ThueMorse,
    /// Parity of the number of `1^k` blocks; `Pattern(2)` is Rudin-Shapiro.
    Pattern(u32),
    /// A finite, user supplied sequence.
    ExplicitBits(BitSeq),
}

impl Family {
    fn block_len(&self) -> Option<u32> {
        match self {
            Family::ThueMorse => Some(1),
            Family::Pattern(k) => Some(*k),
            Family::ExplicitBits(_) => None,
        }
    }
}

/// Integer polynomial with nonnegative coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexPoly {
    coeffs: Vec<u64>,
}

impl IndexPoly {
    /// Fails unless the polynomial has degree at least one.
    pub fn new(mut coeffs: Vec<u64>) -> Result<Self> {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidParameter(
                "index polynomial must have degree >= 1".into(),
            ));
        }
        Ok(IndexPoly { coeffs })
    }

    /// `i`, i.e. the parent sequence itself.
    pub fn identity() -> Self {
        IndexPoly { coeffs: vec![0, 1] }
    }

    /// `i^d`.
    pub fn monomial(d: usize) -> Result<Self> {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        Self::new(coeffs)
    }

    pub fn squares() -> Self {
        IndexPoly {
            coeffs: vec![0, 0, 1],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs == [0, 1]
    }

    /// Horner evaluation in `u128`, `None` on overflow.
    pub fn eval_u128(&self, i: u64) -> Option<u128> {
        let x = i as u128;
        self.coeffs
            .iter()
            .rev()
            .try_fold(0u128, |acc, &c| acc.checked_mul(x)?.checked_add(c as u128))
    }

    pub fn eval(&self, i: &BigIndex) -> BigIndex {
        BigIndex(
            self.coeffs
                .iter()
                .rev()
                .fold(BigUint::zero(), |acc, &c| acc * &i.0 + c),
        )
    }
}

/// Accepts `i`, `i^d` and constant-first coefficient lists `c0,c1,...,cd`.
impl FromStr for IndexPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "i" {
            return Ok(Self::identity());
        }
        if let Some(d) = s.strip_prefix("i^") {
            let d: usize = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in polynomial {s:?}")))?;
            return Self::monomial(d);
        }
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in polynomial {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

impl fmt::Display for IndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("i");
        }
        if self.coeffs[..self.degree()].iter().all(|&c| c == 0) && self.coeffs[self.degree()] == 1
        {
            return write!(f, "i^{}", self.degree());
        }
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A sequence family sampled along an index polynomial: term `i` is
/// `family[poly(i)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    pub family: Family,
    pub index_poly: IndexPoly,
}

impl SequenceSpec {
    pub fn new(family: Family, index_poly: IndexPoly) -> Result<Self> {
        if let Family::Pattern(0) = family {
            return Err(Error::InvalidParameter("pattern length k must be >= 1".into()));
        }
        Ok(SequenceSpec { family, index_poly })
    }

    pub fn thue_morse() -> Self {
        SequenceSpec {
            family: Family::ThueMorse,
            index_poly: IndexPoly::identity(),
        }
    }

    /// Thue-Morse along the squares.
    pub fn thue_morse_squares() -> Self {
        SequenceSpec {
            family: Family::ThueMorse,
            index_poly: IndexPoly::squares(),
        }
    }

    pub fn pattern(k: u32) -> Result<Self> {
        Self::new(Family::Pattern(k), IndexPoly::identity())
    }

    /// Pattern sequence `P_k` along the squares.
    pub fn pattern_squares(k: u32) -> Result<Self> {
        Self::new(Family::Pattern(k), IndexPoly::squares())
    }

    pub fn explicit(bits: BitSeq) -> Self {
        SequenceSpec {
            family: Family::ExplicitBits(bits),
            index_poly: IndexPoly::identity(),
        }
    }

    /// Term at a machine-word index, using `u128` arithmetic when the
    /// polynomial value fits.
    pub fn term_at(&self, i: u64) -> Result<bool> {
        match self.index_poly.eval_u128(i) {
            Some(n) => self.parent_term_u128(n),
            None => self.parent_term(&self.index_poly.eval(&BigIndex::from(i))),
        }
    }

    fn parent_term_u128(&self, n: u128) -> Result<bool> {
        match &self.family {
            Family::ExplicitBits(bits) => explicit_term(bits, &BigIndex::from(n)),
            f => Ok(pattern_count_u128(n, f.block_len().unwrap()) & 1 == 1),
        }
    }

    fn parent_term(&self, n: &BigIndex) -> Result<bool> {
        match &self.family {
            Family::ExplicitBits(bits) => explicit_term(bits, n),
            f => Ok(pattern_count(n, f.block_len().unwrap()) & 1 == 1),
        }
    }
}

fn explicit_term(bits: &BitSeq, n: &BigIndex) -> Result<bool> {
    match n.to_u128().and_then(|v| usize::try_from(v).ok()) {
        Some(idx) if idx < bits.len() => Ok(bits.get(idx)),
        _ => Err(Error::OutOfRange {
            index: n.to_string(),
            len: bits.len(),
        }),
    }
}

/// Term `i` of the sequence described by `spec`.
pub fn term(spec: &SequenceSpec, i: &BigIndex) -> Result<bool> {
    match i.0.to_u64() {
        Some(small) => spec.term_at(small),
        None => spec.parent_term(&spec.index_poly.eval(i)),
    }
}

/// The first `n` terms of the sequence.
pub fn prefix(spec: &SequenceSpec, n: usize) -> Result<BitSeq> {
    let mut out = BitSeq::with_capacity(n);
    match (&spec.family, spec.index_poly.is_identity()) {
        (Family::ExplicitBits(bits), true) => return bits.prefix(n),
        (Family::ThueMorse, true) => {
            for i in 0..n as u64 {
                out.push(i.count_ones() & 1 == 1);
            }
        }
        _ => {
            for i in 0..n as u64 {
                out.push(spec.term_at(i)?);
            }
        }
    }
    Ok(out)
}

/// Outcome of [`digit_identity_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Additivity {
    Holds,
    Fails,
    /// The supports are not separated enough for the identity to apply.
    NotApplicable,
}

/// Checks `s_k(a + b) = s_k(a) + s_k(b)` when the binary supports of `a` and
/// `b` are separated by at least `k - 1` zero digits, i.e. all ones of the
/// smaller-support operand sit strictly below the other one's lowest one
/// with a gap of `k - 1` or more zeros.
pub fn digit_identity_check(a: &BigIndex, b: &BigIndex, k: u32) -> Additivity {
    assert!(k >= 1, "pattern length must be positive");
    if !a.is_zero() && !b.is_zero() {
        let (low, high) = if a.bits() <= b.bits() { (a, b) } else { (b, a) };
        let gap = high.trailing_zeros().unwrap();
        if gap < low.bits() + (k as u64 - 1) {
            return Additivity::NotApplicable;
        }
    }
    if pattern_count(&(a + b), k) == pattern_count(a, k) + pattern_count(b, k) {
        Additivity::Holds
    } else {
        Additivity::Fails
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigIndex {
        BigIndex::from(v)
    }

    /// Pattern count by scanning the digit string.
    fn scan_count(n: u64, k: usize) -> u64 {
        if n == 0 {
            return 0;
        }
        let digits = format!("{n:b}");
        let block = "1".repeat(k);
        (0..digits.len())
            .filter(|&p| digits[p..].starts_with(&block))
            .count() as u64
    }

    #[test]
    fn ones_count_examples() {
        assert_eq!(ones_count(&big(0)), 0);
        assert_eq!(ones_count(&big(5)), 2);
        let l = 2;
        let n = (BigIndex::pow2(l) + BigIndex::pow2(l + 1)).square();
        assert_eq!(ones_count(&n), 2);
    }

    #[test]
    fn pattern_count_examples() {
        assert_eq!(pattern_count(&big(7), 2), 2);
        assert_eq!(pattern_count(&big(3), 2), 1);
        assert_eq!(pattern_count(&big(1 + 8 + 16), 2), 1);
        assert_eq!(pattern_count(&big(1 + 128 - 8), 3), 2);
        assert_eq!(pattern_count(&big(0), 4), 0);
    }

    #[test]
    fn pattern_count_matches_digit_scan() {
        for n in 0..5000u64 {
            for k in 1..6u32 {
                let expected = scan_count(n, k as usize);
                assert_eq!(pattern_count(&big(n), k), expected, "n={n} k={k}");
                assert_eq!(pattern_count_u128(n as u128, k) as u64, expected);
            }
        }
    }

    #[test]
    fn rudin_shapiro_prefix() {
        // r_n = (-1)^{s_2(n)}: + + + - + + - + (OEIS A020985)
        let rs = prefix(&SequenceSpec::pattern(2).unwrap(), 8).unwrap();
        assert_eq!(rs.to_string(), "00010010");
    }

    #[test]
    fn term_examples() {
        let tsq = SequenceSpec::thue_morse_squares();
        assert!(!term(&tsq, &big(3)).unwrap());
        assert!(!term(&SequenceSpec::thue_morse(), &big(0)).unwrap());
        assert!(!term(&SequenceSpec::pattern_squares(2).unwrap(), &big(0)).unwrap());
    }

    #[test]
    fn term_on_huge_index() {
        // (2^70)^2 = 2^140 has a single one
        let tsq = SequenceSpec::thue_morse_squares();
        assert!(term(&tsq, &BigIndex::pow2(70)).unwrap());
        // 2^70 + 1 squared = 2^140 + 2^71 + 1
        let i = BigIndex::pow2(70) + big(1);
        assert!(term(&tsq, &i).unwrap());
    }

    #[test]
    fn term_at_falls_back_to_bigint() {
        let cube = SequenceSpec::new(Family::ThueMorse, IndexPoly::monomial(3).unwrap()).unwrap();
        let i = u64::MAX - 12;
        let expected = ones_count(&big(i).square().mul(big(i))) & 1 == 1;
        assert_eq!(cube.term_at(i).unwrap(), expected);
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(
            prefix(&SequenceSpec::thue_morse(), 8).unwrap().to_string(),
            "01101001"
        );
        assert_eq!(
            prefix(&SequenceSpec::thue_morse_squares(), 6).unwrap().to_string(),
            "011011"
        );
        let p1 = prefix(&SequenceSpec::pattern_squares(1).unwrap(), 64).unwrap();
        let t = prefix(&SequenceSpec::thue_morse_squares(), 64).unwrap();
        assert_eq!(p1, t);
        assert!(prefix(&SequenceSpec::thue_morse(), 0).unwrap().is_empty());
    }

    #[test]
    fn explicit_family() {
        let bits: BitSeq = "0110".parse().unwrap();
        let spec = SequenceSpec::explicit(bits.clone());
        assert_eq!(prefix(&spec, 3).unwrap().to_string(), "011");
        assert!(matches!(term(&spec, &big(4)), Err(Error::OutOfRange { .. })));

        let sq = SequenceSpec::new(Family::ExplicitBits(bits), IndexPoly::squares()).unwrap();
        assert_eq!(prefix(&sq, 2).unwrap().to_string(), "01");
        assert!(prefix(&sq, 3).is_err());
    }

    #[test]
    fn poly_parsing() {
        assert_eq!("i".parse::<IndexPoly>().unwrap(), IndexPoly::identity());
        assert_eq!("i^2".parse::<IndexPoly>().unwrap(), IndexPoly::squares());
        let p: IndexPoly = "1,0,3".parse().unwrap();
        assert_eq!(p.eval_u128(2), Some(13));
        assert_eq!(p.to_string(), "1,0,3");
        assert_eq!(IndexPoly::squares().to_string(), "i^2");
        assert!("5".parse::<IndexPoly>().is_err());
        assert!("i^0".parse::<IndexPoly>().is_err());
        assert!("1,-2".parse::<IndexPoly>().is_err());
        assert!("i^x".parse::<IndexPoly>().is_err());
    }

    #[test]
    fn pattern_zero_rejected() {
        assert!(SequenceSpec::pattern(0).is_err());
    }

    #[test]
    fn digit_identity_examples() {
        assert_eq!(digit_identity_check(&big(3), &big(12), 1), Additivity::Holds);
        assert_eq!(
            digit_identity_check(&big(1), &big(2), 2),
            Additivity::NotApplicable
        );
        // separated by one zero: 1 and 4 -> 101, no block 11 across
        assert_eq!(digit_identity_check(&big(1), &big(4), 2), Additivity::Holds);

        let l = 3u32;
        let bound = ((1u64 << (l + 2)) - 1).isqrt();
        for i in 0..=bound {
            let a = big(i * i);
            let b = big(i) * BigIndex::pow2(l + 2) + BigIndex::pow2(2 * l + 2);
            assert_eq!(digit_identity_check(&a, &b, 1), Additivity::Holds);
            assert_eq!(ones_count(&(&a + &b)), ones_count(&a) + ones_count(&big(i)) + 1);
        }
    }

    #[test]
    fn thue_morse_recurrence() {
        let t = SequenceSpec::thue_morse();
        for n in 0..(1u64 << 20) {
            let tn = t.term_at(n).unwrap();
            assert_eq!(t.term_at(2 * n).unwrap(), tn);
            assert_eq!(t.term_at(2 * n + 1).unwrap(), !tn);
        }
    }
}
