//! CSS constructions from classical parity-check matrices and
//! entanglement-assisted code assembly.
//!
//! The CSS map turns parity-check rows into pure-Z and pure-X generators.
//! When the result fails to commute, one ebit per anticommuting pair fixes
//! it: a receiver column carrying Z on one pair member and X on the other
//! absorbs the anticommutation.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::stabilizer::{derive_logicals, QuantumCode};
use crate::symplectic::{BitMatrix, CheckMatrix, Pauli, PauliString};
use crate::synthesis::symplectic_gram_schmidt;
use crate::tables;

/// A classical binary parity-check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalParityCheck {
    matrix: BitMatrix,
}

impl ClassicalParityCheck {
    pub fn new(matrix: BitMatrix) -> Self {
        ClassicalParityCheck { matrix }
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Single-bit-error correction requires every column to be a distinct
    /// nonzero syndrome.
    pub fn corrects_single_error(&self) -> bool {
        let cols = self.matrix.transpose();
        for i in 0..cols.rows() {
            if cols.row(i) == 0 {
                return false;
            }
            for j in (i + 1)..cols.rows() {
                if cols.row(i) == cols.row(j) {
                    return false;
                }
            }
        }
        true
    }
}

/// The parity check matrix of the [7,4,3] Hamming code.
pub fn hamming_7_4() -> ClassicalParityCheck {
    let rows = tables::HAMMING_7_4
        .iter()
        .map(|r| {
            r.chars()
                .enumerate()
                .fold(0u64, |acc, (i, c)| acc | (((c == '1') as u64) << i))
        })
        .collect();
    ClassicalParityCheck::new(BitMatrix::from_rows(rows, 7).expect("fixture"))
}

/// Remove one column (0-based) of a parity-check matrix.
pub fn delete_column(
    h: &ClassicalParityCheck,
    col: usize,
) -> Result<ClassicalParityCheck, Error> {
    Ok(ClassicalParityCheck::new(h.matrix.without_column(col)?))
}

/// Stack Z-type rows from `hz` over X-type rows from `hx`. The rows need not
/// commute; commutation is exactly orthogonality of the two row spaces.
pub fn css_generators(
    hx: &ClassicalParityCheck,
    hz: &ClassicalParityCheck,
) -> Result<CheckMatrix, Error> {
    if hx.cols() != hz.cols() {
        return Err(Error::WidthMismatch {
            expected: hz.cols(),
            found: hx.cols(),
        });
    }
    let n = hz.cols();
    let mut out = CheckMatrix::empty(n)?;
    for i in 0..hz.rows() {
        out.push(PauliString::from_bits(n, 0, hz.matrix.row(i))?)?;
    }
    for i in 0..hx.rows() {
        out.push(PauliString::from_bits(n, hx.matrix.row(i), 0)?)?;
    }
    Ok(out)
}

/// Extend a (possibly non-commuting) independent generator set into a valid
/// entanglement-assisted code: one receiver column is prepended per
/// anticommuting pair, carrying Z on the earlier pair member and X on the
/// later one. Logical operators are derived from the centralizer quotient.
pub fn build_ea_code(gens: &CheckMatrix) -> Result<QuantumCode, Error> {
    if !gens.is_independent() {
        return Err(Error::DependentRows);
    }
    let out = symplectic_gram_schmidt(gens)?;
    let c = out.ebits;
    let n_alice = gens.n();
    let n = n_alice + c;
    let shift: Vec<usize> = (c..n).collect();
    let mut rows: Vec<PauliString> = Vec::with_capacity(gens.len());
    for (pair_idx, (za, xa)) in out.pairs.iter().enumerate() {
        let mut z_row = za.embed(&shift, n)?;
        z_row = z_row.mul(&PauliString::single(n, pair_idx, Pauli::Z)?)?;
        let mut x_row = xa.embed(&shift, n)?;
        x_row = x_row.mul(&PauliString::single(n, pair_idx, Pauli::X)?)?;
        rows.push(z_row);
        rows.push(x_row);
    }
    for iso in out.isotropic.iter() {
        rows.push(iso.embed(&shift, n)?);
    }
    let stabilizer = CheckMatrix::from_rows(rows)?;
    let gauge = CheckMatrix::empty(n)?;
    let (lx, lz) = derive_logicals(&stabilizer, &gauge)?;
    let bob: Vec<usize> = (0..c).collect();
    let code = QuantumCode::from_parts(stabilizer, None, lx, lz, &bob)?;
    code.validate()
        .map_err(|d| Error::structure(format!("assembled code is invalid: {d}")))?;
    Ok(code)
}

/// Turn a standard code into an entanglement-assisted one by electing one
/// qubit as the receiver's half of an ebit. Free row operations reduce the
/// chosen column to exactly one X and one Z across the generators.
pub fn reduce_to_ebit(code: &QuantumCode, qubit: usize) -> Result<QuantumCode, Error> {
    if qubit >= code.n() {
        return Err(Error::IndexOutOfRange {
            index: qubit,
            limit: code.n(),
        });
    }
    if !code.bob_columns().is_empty() || !code.gauge().is_empty() {
        return Err(Error::structure(
            "ebit reduction starts from a standard code (no receiver columns, no gauge)",
        ));
    }
    let mut rows: Vec<PauliString> = code.stabilizer().rows().to_vec();

    // One representative per letter on the chosen column; other carriers of
    // the same letter absorb the representative.
    let mut rep: [Option<usize>; 3] = [None, None, None];
    let letter_slot = |p: &PauliString| match p.letter(qubit) {
        Pauli::I => None,
        Pauli::X => Some(0),
        Pauli::Y => Some(1),
        Pauli::Z => Some(2),
    };
    for i in 0..rows.len() {
        let Some(slot) = letter_slot(&rows[i]) else {
            continue;
        };
        match rep[slot] {
            None => rep[slot] = Some(i),
            Some(r) => {
                let chosen = rows[r].clone();
                rows[i] = rows[i].mul_unchecked(&chosen);
            }
        }
    }
    let distinct = rep.iter().flatten().count();
    if distinct < 2 {
        return Err(Error::structure(format!(
            "column {} carries fewer than two distinct letters; no ebit reduction exists",
            qubit + 1
        )));
    }
    // Eliminate the Y representative by folding in the X and Z ones (or the
    // single other representative when one of them is missing).
    if let Some(y) = rep[1] {
        match (rep[0], rep[2]) {
            (Some(x), Some(z)) => {
                let fold = rows[x].mul_unchecked(&rows[z]);
                rows[y] = rows[y].mul_unchecked(&fold);
            }
            (Some(x), None) => {
                let fold = rows[x].clone();
                rows[y] = rows[y].mul_unchecked(&fold);
            }
            (None, Some(z)) => {
                let fold = rows[z].clone();
                rows[y] = rows[y].mul_unchecked(&fold);
            }
            (None, None) => unreachable!("two distinct letters include X or Z"),
        }
    }

    // The column now carries exactly one X and one Z.
    let mut x_count = 0;
    let mut z_count = 0;
    for r in &rows {
        match r.letter(qubit) {
            Pauli::X => x_count += 1,
            Pauli::Z => z_count += 1,
            Pauli::Y => {
                return Err(Error::structure(
                    "reduction left a Y on the receiver column; this is a bug",
                ))
            }
            Pauli::I => {}
        }
    }
    if x_count != 1 || z_count != 1 {
        return Err(Error::structure(format!(
            "receiver column ended with {x_count} X and {z_count} Z letters; this is a bug"
        )));
    }

    let out = QuantumCode::from_parts(
        CheckMatrix::from_rows(rows)?,
        None,
        code.logical_x().to_vec(),
        code.logical_z().to_vec(),
        &[qubit],
    )?;
    out.validate()
        .map_err(|d| Error::structure(format!("reduced code is invalid: {d}")))?;
    Ok(out)
}

/// The generator-level equivalence of the [[6,1,3;1]] code with the Steane
/// code: two row products (g1 <- g1 g2 g3, g5 <- g5 g6), one row swap
/// (the new g4 and g5), and one cyclic column shift that carries the
/// receiver column to the last position. The output stabilizer spans
/// exactly the CSS group of the [7,4,3] Hamming matrix, with the former
/// receiver column as the seventh (restored) Hamming column. Input must be
/// a 7-column code in the printed row ordering.
pub fn steane_equivalence_transform(code: &QuantumCode) -> Result<QuantumCode, Error> {
    if code.n() != 7 || code.stabilizer().len() != 6 {
        return Err(Error::usage(format!(
            "expected a 7-column code with 6 generators, got {} columns and {} rows",
            code.n(),
            code.stabilizer().len()
        )));
    }
    let mut rows: Vec<PauliString> = code.stabilizer().rows().to_vec();
    rows[0] = rows[0].mul_unchecked(&rows[1]).mul_unchecked(&rows[2]);
    rows[4] = rows[4].mul_unchecked(&rows[5]);
    rows.swap(3, 4);

    // Shift every column left by one; the receiver column wraps to the end.
    let cyclic: [usize; 7] = [1, 2, 3, 4, 5, 6, 0];
    let mut logical_x = code.logical_x().to_vec();
    let mut logical_z = code.logical_z().to_vec();
    for r in rows
        .iter_mut()
        .chain(logical_x.iter_mut())
        .chain(logical_z.iter_mut())
    {
        *r = r.permuted(&cyclic)?;
    }

    let out = QuantumCode::from_parts(
        CheckMatrix::from_rows(rows)?,
        None,
        logical_x,
        logical_z,
        &[],
    )?;
    out.validate()
        .map_err(|d| Error::structure(format!("transformed code is invalid: {d}")))?;
    Ok(out)
}
