use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use super::series::F2Series;
use crate::error::Result;

/// A polynomial in `F2[x, y]` stored as its set of monomials `x^i y^j`.
///
/// Adding a monomial that is already present removes it (coefficients live
/// in F2), so the set never holds duplicates and the zero polynomial is the
/// empty set.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct F2Bivariate {
    monomials: BTreeSet<(u32, u32)>,
}

impl F2Bivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    /// `x^i y^j`.
    pub fn monomial(i: u32, j: u32) -> Self {
        let mut h = Self::zero();
        h.toggle(i, j);
        h
    }

    /// Adds the monomial `x^i y^j` (mod 2).
    pub fn toggle(&mut self, i: u32, j: u32) {
        if !self.monomials.remove(&(i, j)) {
            self.monomials.insert((i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        self.monomials.contains(&(i, j))
    }

    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.monomials.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Largest `i + j` over the monomials; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.monomials.iter().map(|&(i, j)| i + j).max()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `h(x, g) mod x^N` where `N` is the truncation of `g`.
    pub fn eval(&self, g: &F2Series) -> Result<F2Series> {
        let max_j = self.monomials.iter().map(|&(_, j)| j).max().unwrap_or(0);
        let powers = PowerCache::new(g, max_j as usize)?;
        let mut acc = F2Series::zero(g.truncation());
        for &(i, j) in &self.monomials {
            acc = acc.add(&powers.get(j as usize).shift_up(i as usize))?;
        }
        Ok(acc)
    }
}

/// `g^0, g^1, ..., g^max` computed incrementally, each from the previous.
#[derive(Clone, Debug)]
pub struct PowerCache {
    base: F2Series,
    powers: Vec<F2Series>,
}

impl PowerCache {
    pub fn new(g: &F2Series, max: usize) -> Result<Self> {
        let mut cache = PowerCache {
            base: g.clone(),
            powers: vec![F2Series::one(g.truncation())],
        };
        cache.extend_to(max)?;
        Ok(cache)
    }

    pub fn extend_to(&mut self, max: usize) -> Result<()> {
        while self.powers.len() <= max {
            let next = self.powers.last().unwrap().mul(&self.base)?;
            self.powers.push(next);
        }
        Ok(())
    }

    pub fn get(&self, j: usize) -> &F2Series {
        &self.powers[j]
    }
}

impl Add for &F2Bivariate {
    type Output = F2Bivariate;

    fn add(self, rhs: &F2Bivariate) -> F2Bivariate {
        F2Bivariate {
            monomials: self
                .monomials
                .symmetric_difference(&rhs.monomials)
                .copied()
                .collect(),
        }
    }
}

impl Add for F2Bivariate {
    type Output = F2Bivariate;

    fn add(self, rhs: F2Bivariate) -> F2Bivariate {
        &self + &rhs
    }
}

impl Mul for &F2Bivariate {
    type Output = F2Bivariate;

    fn mul(self, rhs: &F2Bivariate) -> F2Bivariate {
        let mut out = F2Bivariate::zero();
        for &(a, b) in &self.monomials {
            for &(c, d) in &rhs.monomials {
                out.toggle(a + c, b + d);
            }
        }
        out
    }
}

impl Mul for F2Bivariate {
    type Output = F2Bivariate;

    fn mul(self, rhs: F2Bivariate) -> F2Bivariate {
        &self * &rhs
    }
}

impl FromIterator<(u32, u32)> for F2Bivariate {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut h = F2Bivariate::zero();
        for (i, j) in iter {
            h.toggle(i, j);
        }
        h
    }
}

impl fmt::Display for F2Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|&(i, j)| {
                let x = match i {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{i}"),
                };
                let y = match j {
                    0 => String::new(),
                    1 => "y".into(),
                    _ => format!("y^{j}"),
                };
                match (x.is_empty(), y.is_empty()) {
                    (true, true) => "1".into(),
                    (false, false) => format!("{x}*{y}"),
                    _ => x + &y,
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for F2Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Bivariate({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitseq::BitSeq;

    fn series(bits: &str) -> F2Series {
        let s: BitSeq = bits.parse().unwrap();
        F2Series::from_bitseq(&s, s.len()).unwrap()
    }

    #[test]
    fn toggling_twice_cancels() {
        let h: F2Bivariate = [(1, 2), (0, 0), (1, 2)].into_iter().collect();
        assert_eq!(h, F2Bivariate::one());
        assert_eq!(h.total_degree(), Some(0));
        assert_eq!(F2Bivariate::zero().total_degree(), None);
    }

    #[test]
    fn binomial_square_in_char_two() {
        let x1 = F2Bivariate::x() + F2Bivariate::one();
        let sq = x1.pow(2);
        assert_eq!(sq, F2Bivariate::monomial(2, 0) + F2Bivariate::one());
        assert_eq!(x1.pow(3).len(), 4);
    }

    #[test]
    fn eval_identity_monomial() {
        let g = series("0110100110010110");
        assert_eq!(F2Bivariate::y().eval(&g).unwrap(), g);
    }

    #[test]
    fn eval_one_plus_x_plus_y_on_all_ones() {
        let h: F2Bivariate = [(0, 0), (1, 0), (0, 1)].into_iter().collect();
        assert!(h.eval(&series("11")).unwrap().is_zero());
    }

    #[test]
    fn eval_constant_and_pure_x() {
        let g = series("10110");
        assert_eq!(F2Bivariate::one().eval(&g).unwrap(), F2Series::one(5));
        assert_eq!(
            F2Bivariate::monomial(3, 0).eval(&g).unwrap(),
            F2Series::monomial(3, 5)
        );
    }

    #[test]
    fn display() {
        let h: F2Bivariate = [(0, 0), (1, 0), (2, 1)].into_iter().collect();
        assert_eq!(h.to_string(), "1 + x + x^2*y");
    }
}
