use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// A dense matrix over F2 with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    rows: Vec<Vec<u64>>,
    ncols: usize,
}

impl F2Matrix {
    pub fn new(ncols: usize) -> Self {
        F2Matrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn from_rows(rows: &[BitSeq]) -> Result<Self> {
        let ncols = rows.first().map_or(0, BitSeq::len);
        let mut m = F2Matrix::new(ncols);
        for r in rows {
            m.push_row(r)?;
        }
        Ok(m)
    }

    pub fn push_row(&mut self, row: &BitSeq) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::InvalidParameter(format!(
                "row of length {} in matrix with {} columns",
                row.len(),
                self.ncols
            )));
        }
        self.rows.push(row.words().to_vec());
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.rows[r][c >> 6] >> (c & 63)) & 1 == 1
    }

    pub fn row(&self, r: usize) -> BitSeq {
        BitSeq::from_words(self.rows[r].clone(), self.ncols)
    }

    /// Row rank by forward elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.ncols {
            let (w, m) = (c >> 6, 1u64 << (c & 63));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & m != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for r in tail.iter_mut().filter(|r| r[w] & m != 0) {
                xor_into(r, pivot);
            }
            rank += 1;
        }
        rank
    }

    /// A nonzero `v` (one bit per row) with `v * M = 0`, if the rows are
    /// linearly dependent.
    ///
    /// Solves `M^T v = 0` by Gauss-Jordan elimination over the columns of
    /// `M^T` from left to right, taking the first row with a one as pivot.
    /// The result is the basis vector of the first free column, so it does
    /// not depend on anything but the matrix itself.
    pub fn kernel_vector(&self) -> Option<BitSeq> {
        let n = self.nrows();
        let nw = n.div_ceil(64);
        // transpose: one packed row per column of `self`
        let mut t = vec![vec![0u64; nw]; self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (wi, &word) in row.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let c = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t[c][r >> 6] |= 1 << (r & 63);
                }
            }
        }

        let mut pivots: Vec<usize> = Vec::new(); // pivot column for each reduced row
        for col in 0..n {
            let (w, m) = (col >> 6, 1u64 << (col & 63));
            let top = pivots.len();
            let Some(p) = (top..t.len()).find(|&r| t[r][w] & m != 0) else {
                let mut v = BitSeq::zeros(n);
                v.set(col, true);
                for (r, &pc) in pivots.iter().enumerate() {
                    if t[r][w] & m != 0 {
                        v.set(pc, true);
                    }
                }
                return Some(v);
            };
            t.swap(top, p);
            let pivot = t[top].clone();
            for (r, row) in t.iter_mut().enumerate() {
                if r != top && row[w] & m != 0 {
                    xor_into(row, &pivot);
                }
            }
            pivots.push(col);
        }
        None
    }

    /// `v * M` where `v` selects rows.
    pub fn left_mul(&self, v: &BitSeq) -> BitSeq {
        assert_eq!(v.len(), self.nrows());
        let mut acc = vec![0u64; self.ncols.div_ceil(64)];
        for (r, row) in self.rows.iter().enumerate() {
            if v.get(r) {
                xor_into(&mut acc, row);
            }
        }
        BitSeq::from_words(acc, self.ncols)
    }
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}
