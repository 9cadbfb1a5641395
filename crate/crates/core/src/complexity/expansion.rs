//! Expansion complexity: the least total degree of a nonzero `h(x, y)` with
//! `h(x, G(x)) = 0 mod x^N`.
//!
//! For each degree bound `d` the monomials `x^i y^j` with `i + j <= d`
//! are evaluated at `G` and the resulting coefficient vectors are tested for
//! linear dependence. Degrees are tried in increasing order, so the first
//! dependence gives the minimum and its kernel vector gives an annihilator.

use super::{ComplexityProfile, Measure};
use crate::bitseq::BitSeq;
use crate::error::{Error, Result};
use crate::f2algebra::{F2Bivariate, F2Matrix, F2Series, PowerCache};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EcResult {
    pub value: usize,
    /// Nonzero polynomial of total degree `value` vanishing at `G mod x^N`.
    /// Absent for the all-zero prefix.
    pub annihilator: Option<F2Bivariate>,
}

/// Default search bound `ceil(sqrt(2N)) + 1`. Every nonzero prefix has an
/// annihilator of total degree at most `sqrt(2N)`.
pub fn default_dmax(n: usize) -> usize {
    ceil_sqrt(2 * n) + 1
}

fn ceil_sqrt(v: usize) -> usize {
    let r = v.isqrt();
    if r * r == v {
        r
    } else {
        r + 1
    }
}

/// Monomials of total degree exactly `d`, ordered by increasing `y` degree.
fn monomials_of_degree(d: usize) -> impl Iterator<Item = (u32, u32)> {
    (0..=d).map(move |j| ((d - j) as u32, j as u32))
}

/// Incremental row echelon form, used only to detect the first dependence.
struct Echelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    /// Reduces `row` against the basis and adds it; returns false if it
    /// reduced to zero.
    fn insert(&mut self, mut row: Vec<u64>) -> bool {
        for (pivot, basis) in &self.rows {
            if (row[pivot >> 6] >> (pivot & 63)) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(basis) {
                    *a ^= b;
                }
            }
        }
        let lead = row
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize);
        match lead {
            Some(p) => {
                // keep the basis fully reduced at the new pivot
                for (_, basis) in self.rows.iter_mut() {
                    if (basis[p >> 6] >> (p & 63)) & 1 == 1 {
                        for (a, b) in basis.iter_mut().zip(&row) {
                            *a ^= b;
                        }
                    }
                }
                self.rows.push((p, row));
                true
            }
            None => false,
        }
    }
}

/// Expansion complexity of the first `n` bits, searching total degrees up to
/// `dmax`. `Ok(None)` means no annihilator of degree `<= dmax` exists.
pub fn expansion_complexity(s: &BitSeq, n: usize, dmax: usize) -> Result<Option<EcResult>> {
    if dmax < 1 {
        return Err(Error::InvalidParameter("dmax must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "expansion complexity needs N >= 1".into(),
        ));
    }
    let g = F2Series::from_bitseq(s, n)?;
    if g.is_zero() {
        return Ok(Some(EcResult {
            value: 0,
            annihilator: None,
        }));
    }

    let mut powers = PowerCache::new(&g, 0)?;
    let mut echelon = Echelon { rows: Vec::new() };
    let mut monomials: Vec<(u32, u32)> = Vec::new();
    for d in 0..=dmax {
        powers.extend_to(d)?;
        let mut dependent = false;
        for (i, j) in monomials_of_degree(d) {
            monomials.push((i, j));
            let row = powers.get(j as usize).shift_up(i as usize);
            if !echelon.insert(row.coeffs().words().to_vec()) {
                dependent = true;
            }
        }
        if dependent {
            return Ok(Some(EcResult {
                value: d,
                annihilator: Some(annihilator(&powers, &monomials)?),
            }));
        }
    }
    Ok(None)
}

/// Kernel vector of the evaluated monomials, read back as a polynomial.
fn annihilator(powers: &PowerCache, monomials: &[(u32, u32)]) -> Result<F2Bivariate> {
    let rows: Vec<BitSeq> = monomials
        .iter()
        .map(|&(i, j)| powers.get(j as usize).shift_up(i as usize).coeffs().clone())
        .collect();
    let v = F2Matrix::from_rows(&rows)?
        .kernel_vector()
        .expect("dependent rows have a kernel vector");
    Ok(monomials
        .iter()
        .enumerate()
        .filter(|&(r, _)| v.get(r))
        .map(|(_, &m)| m)
        .collect())
}

/// `(N, E(s, N))` for each `N` in `ns`, using the default degree bound.
pub fn expansion_profile(s: &BitSeq, ns: impl IntoIterator<Item = usize>) -> Result<ComplexityProfile> {
    let mut points = Vec::new();
    for n in ns {
        let r = expansion_complexity(s, n, default_dmax(n))?
            .expect("default bound always admits an annihilator");
        points.push((n, r.value as u64));
    }
    Ok(ComplexityProfile {
        measure: Measure::ExpansionComplexity,
        points,
    })
}
