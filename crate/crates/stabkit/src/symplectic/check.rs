use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::symplectic::{BitMatrix, PauliString, Rref};

/// An ordered list of Pauli strings over a fixed qubit count, used for
/// generator sets (stabilizers, gauge groups, raw CSS rows).
#[derive(Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    n: usize,
    rows: Vec<PauliString>,
}

impl CheckMatrix {
    /// An empty generator set on `n` qubits.
    pub fn empty(n: usize) -> Result<Self, Error> {
        PauliString::identity(n)?;
        Ok(CheckMatrix { n, rows: Vec::new() })
    }

    pub fn from_rows(rows: Vec<PauliString>) -> Result<Self, Error> {
        let Some(first) = rows.first() else {
            return Err(Error::usage(
                "cannot infer qubit count from an empty row list",
            ));
        };
        let n = first.n();
        for r in &rows {
            if r.n() != n {
                return Err(Error::WidthMismatch {
                    expected: n,
                    found: r.n(),
                });
            }
        }
        Ok(CheckMatrix { n, rows })
    }

    /// Parse one Pauli string per input item.
    pub fn from_strs(rows: &[&str]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<_>, _>>()?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, i: usize) -> &PauliString {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    pub fn iter(&self) -> core::slice::Iter<'_, PauliString> {
        self.rows.iter()
    }

    pub fn push(&mut self, p: PauliString) -> Result<(), Error> {
        if p.n() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        self.rows.push(p);
        Ok(())
    }

    /// The binary Z|X form: each row is `z | (x << n)`, 2n columns total,
    /// with the Z block on the left.
    pub fn binary_form(&self) -> BitMatrix {
        let words = self.rows.iter().map(|p| p.binary_row()).collect();
        BitMatrix::from_rows(words, 2 * self.n).expect("2n bounded by PauliString cap")
    }

    pub fn rank(&self) -> usize {
        self.binary_form().rank()
    }

    /// Independent iff the binary form has rank equal to the row count.
    pub fn is_independent(&self) -> bool {
        self.rank() == self.rows.len()
    }

    /// The first pair of rows that anticommute, if any.
    pub fn first_anticommuting_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows.len() {
            for j in (i + 1)..self.rows.len() {
                if self.rows[i].sp_unchecked(&self.rows[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn commutes_with_all(&self, p: &PauliString) -> Result<bool, Error> {
        if p.n() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        Ok(self.rows.iter().all(|r| !r.sp_unchecked(p)))
    }

    pub(crate) fn binary_rref(&self) -> Rref {
        self.binary_form().rref()
    }

    /// Phase-free membership: `p` lies in the GF(2) row span.
    pub fn group_contains(&self, p: &PauliString) -> Result<bool, Error> {
        if p.n() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        Ok(self.binary_rref().contains(p.binary_row()))
    }

    /// Span equality: the two generator lists generate the same group.
    pub fn group_equal(&self, other: &CheckMatrix) -> Result<bool, Error> {
        if other.n != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self.binary_rref().matrix == other.binary_rref().matrix)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn concat(&self, other: &CheckMatrix) -> Result<CheckMatrix, Error> {
        if other.n != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(CheckMatrix { n: self.n, rows })
    }

    /// All elements of the generated group (2^rank of them). Guarded to keep
    /// enumeration at desk scale.
    pub fn span_elements(&self) -> Result<Vec<PauliString>, Error> {
        let rref = self.binary_rref();
        let rank = rref.rank;
        if rank > 20 {
            return Err(Error::Capacity {
                what: "span enumeration rank",
                requested: rank,
                limit: 20,
            });
        }
        let basis: Vec<u64> = (0..rank).map(|i| rref.matrix.row(i)).collect();
        let mut out = Vec::with_capacity(1 << rank);
        for sel in 0u64..(1 << rank) {
            let mut v = 0u64;
            for (i, &b) in basis.iter().enumerate() {
                if (sel >> i) & 1 == 1 {
                    v ^= b;
                }
            }
            out.push(PauliString::from_binary_row(self.n, v));
        }
        Ok(out)
    }

    /// A basis of the centralizer: all Paulis commuting with every row.
    pub fn centralizer_basis(&self) -> Vec<PauliString> {
        // Commutation with row r is a linear constraint v . swap(r) = 0,
        // where swap exchanges the Z and X halves of the binary row.
        let n = self.n;
        let constraint_rows: Vec<u64> = self
            .rows
            .iter()
            .map(|p| p.x_bits() | (p.z_bits() << n))
            .collect();
        let constraints =
            BitMatrix::from_rows(constraint_rows, 2 * n).expect("2n bounded");
        constraints
            .kernel_basis()
            .into_iter()
            .map(|v| PauliString::from_binary_row(n, v))
            .collect()
    }

    /// Restrict every row to the given columns.
    pub fn extract_columns(&self, cols: &[usize]) -> Result<CheckMatrix, Error> {
        let rows = self
            .rows
            .iter()
            .map(|p| p.extract(cols))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CheckMatrix {
            n: cols.len(),
            rows,
        })
    }
}

impl fmt::Display for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CheckMatrix[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    fn table_one() -> CheckMatrix {
        CheckMatrix::from_strs(&tables::SIX_QUBIT_STABILIZER).unwrap()
    }

    #[test]
    fn table_one_rows_commute_and_are_independent() {
        let s = table_one();
        assert_eq!(s.first_anticommuting_pair(), None);
        assert!(s.is_independent());
        assert_eq!(s.rank(), 5);
    }

    #[test]
    fn stabilizer_contains_z4z6_but_not_x1x2() {
        let s = table_one();
        assert!(s.group_contains(&"IIIZIZ".parse().unwrap()).unwrap());
        assert!(s.group_contains(&"IIIIII".parse().unwrap()).unwrap());
        assert!(!s.group_contains(&"XXIIII".parse().unwrap()).unwrap());
    }

    #[test]
    fn group_equality_ignores_row_order_and_row_ops() {
        let s = table_one();
        let mut reversed: Vec<PauliString> = s.rows().to_vec();
        reversed.reverse();
        let r = CheckMatrix::from_rows(reversed).unwrap();
        assert!(s.group_equal(&r).unwrap());

        let mut mixed = s.rows().to_vec();
        mixed[0] = mixed[0].mul(&s.row(1)).unwrap();
        let m = CheckMatrix::from_rows(mixed).unwrap();
        assert!(s.group_equal(&m).unwrap());

        let xx = CheckMatrix::from_strs(&["XX"]).unwrap();
        let zz = CheckMatrix::from_strs(&["ZZ"]).unwrap();
        assert!(!xx.group_equal(&zz).unwrap());
    }

    #[test]
    fn span_members_commute_with_every_generator() {
        let s = table_one();
        for member in s.span_elements().unwrap() {
            for g in s.iter() {
                assert!(!member.sp_unchecked(g), "{member} vs {g}");
            }
        }
    }

    #[test]
    fn centralizer_has_expected_dimension() {
        // n = 6, 5 independent generators: centralizer dimension 2n - 5 = 7.
        let s = table_one();
        let c = s.centralizer_basis();
        assert_eq!(c.len(), 7);
        for v in &c {
            assert!(s.commutes_with_all(v).unwrap());
        }
    }

    #[test]
    fn width_mismatch_is_an_error() {
        let s = table_one();
        assert!(s.group_contains(&"X".parse().unwrap()).is_err());
        let other = CheckMatrix::from_strs(&["XX"]).unwrap();
        assert!(s.group_equal(&other).is_err());
    }
}
