use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// Maximum qubit count for a [`PauliString`].
///
/// Widths are capped so the 2n-column binary symplectic form of a generator
/// set fits in one machine word per row.
pub const MAX_QUBITS: usize = 32;

/// A single-qubit Pauli letter. The product convention is Y = ZX, so the
/// letter Y carries both an X bit and a Z bit and no imaginary phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Decode a letter from its (x, z) bit pair.
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    /// The (x, z) bit pair of this letter.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self, Error> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::usage(alloc::format!(
                "invalid Pauli character '{other}' (expected I, X, Y, or Z)"
            ))),
        }
    }
}

/// A phase-free n-qubit Pauli operator stored as paired X/Z bit vectors.
///
/// Column 0 is the leftmost printed letter (qubit 1 in table notation).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
}

impl PauliString {
    fn check_width(n: usize) -> Result<(), Error> {
        if n == 0 {
            return Err(Error::usage("a Pauli string needs at least one qubit"));
        }
        if n > MAX_QUBITS {
            return Err(Error::Capacity {
                what: "qubit count",
                requested: n,
                limit: MAX_QUBITS,
            });
        }
        Ok(())
    }

    fn mask(n: usize) -> u64 {
        if n == 64 {
            !0
        } else {
            (1u64 << n) - 1
        }
    }

    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Result<Self, Error> {
        Self::check_width(n)?;
        Ok(PauliString { n, x: 0, z: 0 })
    }

    /// Build from raw X/Z bit masks (bit `i` = column `i`).
    pub fn from_bits(n: usize, x: u64, z: u64) -> Result<Self, Error> {
        Self::check_width(n)?;
        let m = Self::mask(n);
        if x & !m != 0 || z & !m != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - (x | z).leading_zeros() as usize,
                limit: n,
            });
        }
        Ok(PauliString { n, x, z })
    }

    /// A single letter acting on one qubit.
    pub fn single(n: usize, qubit: usize, p: Pauli) -> Result<Self, Error> {
        Self::check_width(n)?;
        if qubit >= n {
            return Err(Error::IndexOutOfRange {
                index: qubit,
                limit: n,
            });
        }
        let (x, z) = p.bits();
        Ok(PauliString {
            n,
            x: (x as u64) << qubit,
            z: (z as u64) << qubit,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    /// The letter on the given column. Panics if out of range.
    pub fn letter(&self, qubit: usize) -> Pauli {
        assert!(qubit < self.n, "qubit {qubit} out of range for n={}", self.n);
        Pauli::from_bits((self.x >> qubit) & 1 == 1, (self.z >> qubit) & 1 == 1)
    }

    /// Number of columns carrying a non-identity letter.
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    fn same_width(&self, other: &Self) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub(crate) fn sp_unchecked(&self, other: &Self) -> bool {
        let t = (self.x & other.z).count_ones() + (self.z & other.x).count_ones();
        t % 2 == 1
    }

    /// Symplectic inner product: `true` (1) iff the operators anticommute.
    pub fn symplectic_product(&self, other: &Self) -> Result<bool, Error> {
        self.same_width(other)?;
        Ok(self.sp_unchecked(other))
    }

    /// `true` iff the operators commute.
    pub fn commutes_with(&self, other: &Self) -> Result<bool, Error> {
        Ok(!self.symplectic_product(other)?)
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        PauliString {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        }
    }

    /// The product of two Paulis, with the global phase dropped.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.same_width(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn set_letter(&mut self, qubit: usize, p: Pauli) {
        let (x, z) = p.bits();
        let bit = 1u64 << qubit;
        self.x = (self.x & !bit) | ((x as u64) << qubit);
        self.z = (self.z & !bit) | ((z as u64) << qubit);
    }

    /// Keep only the given columns, producing a string of width `cols.len()`.
    pub fn extract(&self, cols: &[usize]) -> Result<Self, Error> {
        Self::check_width(cols.len())?;
        let mut out = PauliString {
            n: cols.len(),
            x: 0,
            z: 0,
        };
        for (i, &c) in cols.iter().enumerate() {
            if c >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    limit: self.n,
                });
            }
            out.x |= ((self.x >> c) & 1) << i;
            out.z |= ((self.z >> c) & 1) << i;
        }
        Ok(out)
    }

    /// Place this string's letters on the given columns of a wider register.
    pub fn embed(&self, cols: &[usize], n_full: usize) -> Result<Self, Error> {
        if cols.len() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: cols.len(),
            });
        }
        let mut out = PauliString::identity(n_full)?;
        for (i, &c) in cols.iter().enumerate() {
            if c >= n_full {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    limit: n_full,
                });
            }
            out.x |= ((self.x >> i) & 1) << c;
            out.z |= ((self.z >> i) & 1) << c;
        }
        Ok(out)
    }

    /// Reorder columns: new column `i` takes the letter of old column `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, Error> {
        if perm.len() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut out = PauliString {
            n: self.n,
            x: 0,
            z: 0,
        };
        for (i, &src) in perm.iter().enumerate() {
            if src >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: src,
                    limit: self.n,
                });
            }
            out.x |= ((self.x >> src) & 1) << i;
            out.z |= ((self.z >> src) & 1) << i;
        }
        Ok(out)
    }

    /// The 2n-bit binary symplectic row: Z bits in columns 0..n, X bits in
    /// columns n..2n (the Z side is the left block).
    pub fn binary_row(&self) -> u64 {
        self.z | (self.x << self.n)
    }

    pub(crate) fn from_binary_row(n: usize, row: u64) -> Self {
        let m = Self::mask(n);
        PauliString {
            n,
            z: row & m,
            x: (row >> n) & m,
        }
    }

    /// Columns (in increasing order) carrying a non-identity letter.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| ((self.x | self.z) >> i) & 1 == 1)
            .collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.letter(i).symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let letters: Vec<Pauli> = s
            .chars()
            .map(Pauli::from_symbol)
            .collect::<Result<_, _>>()?;
        Self::check_width(letters.len())?;
        let mut p = PauliString {
            n: letters.len(),
            x: 0,
            z: 0,
        };
        for (i, l) in letters.iter().enumerate() {
            p.set_letter(i, *l);
        }
        Ok(p)
    }
}

// Ordering is letter-lexicographic (I < X < Y < Z, leftmost column first),
// so sorted output matches the printed table notation. Widths compare first.
impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for i in 0..self.n {
                let o = self.letter(i).cmp(&other.letter(i));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
