use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A dense GF(2) matrix with up to 64 columns, one machine word per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<u64>,
}

/// Reduced row-echelon form of a [`BitMatrix`] together with its pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl BitMatrix {
    pub const MAX_COLS: usize = 64;

    fn check_cols(cols: usize) -> Result<(), Error> {
        if cols > Self::MAX_COLS {
            return Err(Error::Capacity {
                what: "matrix columns",
                requested: cols,
                limit: Self::MAX_COLS,
            });
        }
        Ok(())
    }

    fn mask(cols: usize) -> u64 {
        if cols == 64 {
            !0
        } else {
            (1u64 << cols) - 1
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self, Error> {
        Self::check_cols(cols)?;
        Ok(BitMatrix {
            cols,
            rows: vec![0; rows],
        })
    }

    pub fn ones(rows: usize, cols: usize) -> Result<Self, Error> {
        Self::check_cols(cols)?;
        Ok(BitMatrix {
            cols,
            rows: vec![Self::mask(cols); rows],
        })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        Self::check_cols(n)?;
        Ok(BitMatrix {
            cols: n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        })
    }

    /// Build from raw row words; bits outside the column range must be clear.
    pub fn from_rows(rows: Vec<u64>, cols: usize) -> Result<Self, Error> {
        Self::check_cols(cols)?;
        let m = Self::mask(cols);
        for (i, r) in rows.iter().enumerate() {
            if r & !m != 0 {
                return Err(Error::Usage(alloc::format!(
                    "row {i} has bits beyond column {cols}"
                )));
            }
        }
        Ok(BitMatrix { cols, rows })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn row_words(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.rows[r] >> c) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let bit = 1u64 << c;
        self.rows[r] = (self.rows[r] & !bit) | ((v as u64) << c);
    }

    pub fn push_row(&mut self, row: u64) {
        debug_assert_eq!(row & !Self::mask(self.cols), 0);
        self.rows.push(row);
    }

    /// Reduced row-echelon form over GF(2), with pivot columns in increasing
    /// order. `rref` is idempotent: `m.rref().matrix.rref() == m.rref()`.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let bit = 1u64 << c;
            let Some(src) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(r, src);
            let pivot_row = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row & bit != 0 {
                    *row ^= pivot_row;
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let rank = pivots.len();
        Rref {
            matrix: BitMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows.len()).expect("row count bounded");
        for (r, &row) in self.rows.iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                out.rows[c] |= 1u64 << r;
                bits &= bits - 1;
            }
        }
        out
    }

    /// GF(2) matrix product.
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix, Error> {
        if self.cols != rhs.rows() {
            return Err(Error::WidthMismatch {
                expected: self.cols,
                found: rhs.rows(),
            });
        }
        let rhs_t = rhs.transpose();
        let mut out = BitMatrix::zeros(self.rows.len(), rhs.cols)?;
        for (r, &row) in self.rows.iter().enumerate() {
            let mut acc = 0u64;
            for (c, &col) in rhs_t.rows.iter().enumerate() {
                acc |= (((row & col).count_ones() as u64) & 1) << c;
            }
            out.rows[r] = acc;
        }
        Ok(out)
    }

    /// A basis (as row words) of the right kernel {v : M v = 0}.
    pub fn kernel_basis(&self) -> Vec<u64> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut basis = Vec::new();
        let is_pivot = |c: usize| pivots.contains(&c);
        for free in (0..self.cols).filter(|&c| !is_pivot(c)) {
            let mut v = 1u64 << free;
            for (i, &p) in pivots.iter().enumerate() {
                if matrix.rows[i] & (1u64 << free) != 0 {
                    v |= 1u64 << p;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Remove one column (later columns shift left).
    pub fn without_column(&self, col: usize) -> Result<BitMatrix, Error> {
        if col >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: col,
                limit: self.cols,
            });
        }
        let low = (1u64 << col) - 1;
        let rows = self
            .rows
            .iter()
            .map(|&r| (r & low) | ((r >> (col + 1)) << col))
            .collect();
        Ok(BitMatrix {
            cols: self.cols - 1,
            rows,
        })
    }
}

impl Rref {
    /// Reduce a vector against the pivot rows; the result is zero iff the
    /// vector lies in the row span.
    pub fn reduce(&self, v: u64) -> u64 {
        let mut v = v;
        for (i, &p) in self.pivots.iter().enumerate() {
            if v & (1u64 << p) != 0 {
                v ^= self.matrix.rows[i];
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for c in 0..self.cols {
                write!(f, "{}", (row >> c) & 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows.len(), self.cols)?;
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for c in 0..self.cols {
                write!(f, "{}", (row >> c) & 1)?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BitMatrix {
        let cols = rows[0].len();
        let words = rows
            .iter()
            .map(|r| {
                r.chars()
                    .enumerate()
                    .fold(0u64, |acc, (i, c)| acc | (((c == '1') as u64) << i))
            })
            .collect();
        BitMatrix::from_rows(words, cols).unwrap()
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(BitMatrix::zeros(3, 5).unwrap().rank(), 0);
    }

    #[test]
    fn all_ones_3x3_has_rank_one() {
        assert_eq!(BitMatrix::ones(3, 3).unwrap().rank(), 1);
    }

    #[test]
    fn identity_has_full_rank_and_pivots() {
        let r = BitMatrix::identity(3).unwrap().rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, alloc::vec![0, 1, 2]);
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(&["110101", "011011", "101110", "110101"]);
        let r1 = a.rref();
        let r2 = r1.matrix.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn truncated_hamming_gram_matrix_has_rank_one() {
        let h = m(&["100101", "010110", "001011"]);
        let g = h.mul(&h.transpose()).unwrap();
        assert_eq!(g, BitMatrix::ones(3, 3).unwrap());
        assert_eq!(g.rank(), 1);
    }

    #[test]
    fn full_hamming_gram_matrix_vanishes() {
        let h = m(&["1001011", "0101101", "0010111"]);
        let g = h.mul(&h.transpose()).unwrap();
        assert_eq!(g, BitMatrix::zeros(3, 3).unwrap());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&["110101", "011011", "101110"]);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 6 - a.rank());
        let v_as_col = |v: u64| {
            BitMatrix::from_rows((0..6).map(|i| (v >> i) & 1).collect(), 1).unwrap()
        };
        for v in ker {
            let prod = a.mul(&v_as_col(v)).unwrap();
            assert!(prod.row_words().iter().all(|&w| w == 0));
        }
    }

    #[test]
    fn without_column_shifts_later_columns() {
        let h = m(&["1001011", "0101101", "0010111"]);
        let t = h.without_column(6).unwrap();
        assert_eq!(t, m(&["100101", "010110", "001011"]));
        assert!(h.without_column(7).is_err());
    }

    #[test]
    fn reduce_detects_span_membership() {
        let a = m(&["1100", "0110"]).rref();
        let member = m(&["1010"]).row(0); // 1100 ^ 0110
        let outsider = m(&["0001"]).row(0);
        assert!(a.contains(member));
        assert!(!a.contains(outsider));
    }
}
