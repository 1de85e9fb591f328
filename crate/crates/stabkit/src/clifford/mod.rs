//! Clifford gate action on Pauli strings and check matrices.
//!
//! Gates act by column updates on the binary Z|X form:
//!
//! - `H i` swaps column i of the Z block with column i of the X block;
//! - `P i` adds X column i into Z column i;
//! - `CNOT i j` adds X column i into X column j and Z column j into Z column i;
//! - `SWAP i j` exchanges columns i and j in both blocks;
//! - `CZ i j` adds X column i into Z column j and X column j into Z column i.
//!
//! Applying these per row realizes U p U† up to global phase. The state-vector
//! layer in [`statevector`] is the sign-exact counterpart.

mod statevector;

pub use statevector::{
    compute_codewords, compute_codewords_gauge_fixed, knill_laflamme_verdicts, Amplitude,
    StateVector, STATEVECTOR_MAX_QUBITS,
};

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::stabilizer::QuantumCode;
use crate::symplectic::{CheckMatrix, PauliString};

/// One Clifford gate on 0-based qubit indices. Two-qubit gates keep their
/// operands distinct; CNOT is (control, target).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    H(usize),
    P(usize),
    Cnot(usize, usize),
    Cz(usize, usize),
    Swap(usize, usize),
}

impl CliffordGate {
    /// Largest qubit index referenced by the gate.
    pub fn max_qubit(&self) -> usize {
        match *self {
            CliffordGate::H(i) | CliffordGate::P(i) => i,
            CliffordGate::Cnot(i, j) | CliffordGate::Cz(i, j) | CliffordGate::Swap(i, j) => {
                i.max(j)
            }
        }
    }

    pub fn validate(&self, n: usize) -> Result<(), Error> {
        if let CliffordGate::Cnot(i, j) | CliffordGate::Cz(i, j) | CliffordGate::Swap(i, j) = *self
        {
            if i == j {
                return Err(Error::usage(alloc::format!(
                    "two-qubit gate needs distinct qubits, got {} twice",
                    i + 1
                )));
            }
        }
        if self.max_qubit() >= n {
            return Err(Error::IndexOutOfRange {
                index: self.max_qubit(),
                limit: n,
            });
        }
        Ok(())
    }

    /// Re-index the gate through a qubit map (position k of `map` is the new
    /// index of qubit k).
    pub fn mapped(&self, map: &[usize]) -> CliffordGate {
        match *self {
            CliffordGate::H(i) => CliffordGate::H(map[i]),
            CliffordGate::P(i) => CliffordGate::P(map[i]),
            CliffordGate::Cnot(i, j) => CliffordGate::Cnot(map[i], map[j]),
            CliffordGate::Cz(i, j) => CliffordGate::Cz(map[i], map[j]),
            CliffordGate::Swap(i, j) => CliffordGate::Swap(map[i], map[j]),
        }
    }
}

impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CliffordGate::H(i) => write!(f, "H {}", i + 1),
            CliffordGate::P(i) => write!(f, "P {}", i + 1),
            CliffordGate::Cnot(i, j) => write!(f, "CNOT {} {}", i + 1, j + 1),
            CliffordGate::Cz(i, j) => write!(f, "CZ {} {}", i + 1, j + 1),
            CliffordGate::Swap(i, j) => write!(f, "SWAP {} {}", i + 1, j + 1),
        }
    }
}

/// An ordered list of gates on `n` qubits, applied first-to-last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordCircuit {
    n: usize,
    gates: Vec<CliffordGate>,
}

impl CliffordCircuit {
    pub fn new(n: usize) -> Self {
        CliffordCircuit {
            n,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n: usize, gates: Vec<CliffordGate>) -> Result<Self, Error> {
        for g in &gates {
            g.validate(n)?;
        }
        Ok(CliffordCircuit { n, gates })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn gates(&self) -> &[CliffordGate] {
        &self.gates
    }

    pub fn push(&mut self, g: CliffordGate) -> Result<(), Error> {
        g.validate(self.n)?;
        self.gates.push(g);
        Ok(())
    }

    /// The circuit with gate order reversed. At the phase-free binary level
    /// every supported gate is an involution, so this inverts the conjugation
    /// action.
    pub fn reversed(&self) -> CliffordCircuit {
        CliffordCircuit {
            n: self.n,
            gates: self.gates.iter().rev().copied().collect(),
        }
    }

    /// Embed into a wider register: qubit k acts on `map[k]`.
    pub fn embedded(&self, map: &[usize], n_full: usize) -> Result<CliffordCircuit, Error> {
        if map.len() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: map.len(),
            });
        }
        let gates: Vec<CliffordGate> = self.gates.iter().map(|g| g.mapped(map)).collect();
        CliffordCircuit::from_gates(n_full, gates)
    }

    /// Conjugate a Pauli by the whole circuit (gate by gate, in order).
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString, Error> {
        if p.n() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        let mut q = p.clone();
        for g in &self.gates {
            q = conjugate_pauli(*g, &q)?;
        }
        Ok(q)
    }
}

impl fmt::Display for CliffordCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gates.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Conjugate one Pauli by one gate: returns U p U† up to global phase.
pub fn conjugate_pauli(gate: CliffordGate, p: &PauliString) -> Result<PauliString, Error> {
    gate.validate(p.n())?;
    let n = p.n();
    let mut x = p.x_bits();
    let mut z = p.z_bits();
    let bit = |w: u64, i: usize| (w >> i) & 1;
    match gate {
        CliffordGate::H(i) => {
            let xi = bit(x, i);
            let zi = bit(z, i);
            x = (x & !(1 << i)) | (zi << i);
            z = (z & !(1 << i)) | (xi << i);
        }
        CliffordGate::P(i) => {
            z ^= bit(x, i) << i;
        }
        CliffordGate::Cnot(i, j) => {
            x ^= bit(x, i) << j;
            z ^= bit(z, j) << i;
        }
        CliffordGate::Cz(i, j) => {
            let xi = bit(x, i);
            let xj = bit(x, j);
            z ^= xi << j;
            z ^= xj << i;
        }
        CliffordGate::Swap(i, j) => {
            let (xi, xj) = (bit(x, i), bit(x, j));
            x = (x & !((1 << i) | (1 << j))) | (xj << i) | (xi << j);
            let (zi, zj) = (bit(z, i), bit(z, j));
            z = (z & !((1 << i) | (1 << j))) | (zj << i) | (zi << j);
        }
    }
    PauliString::from_bits(n, x, z)
}

/// Conjugate every row of a check matrix by the circuit.
pub fn conjugate_check_matrix(
    circuit: &CliffordCircuit,
    m: &CheckMatrix,
) -> Result<CheckMatrix, Error> {
    if circuit.n() != m.n() {
        return Err(Error::WidthMismatch {
            expected: circuit.n(),
            found: m.n(),
        });
    }
    let rows = m
        .iter()
        .map(|r| circuit.conjugate(r))
        .collect::<Result<Vec<_>, _>>()?;
    CheckMatrix::from_rows(rows)
}

/// Which logical operator of which block a [`LogicalMap`] entry refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogicalLabel {
    pub block: usize,
    pub index: usize,
    pub kind: LogicalKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogicalKind {
    X,
    Z,
}

impl LogicalLabel {
    pub fn x(block: usize) -> Self {
        LogicalLabel {
            block,
            index: 0,
            kind: LogicalKind::X,
        }
    }

    pub fn z(block: usize) -> Self {
        LogicalLabel {
            block,
            index: 0,
            kind: LogicalKind::Z,
        }
    }
}

/// Expected action of a circuit on logical operators: each source logical
/// maps to the product of the target logicals, modulo the stabilizer.
pub type LogicalMap = Vec<(LogicalLabel, Vec<LogicalLabel>)>;

fn block_columns(block: usize, n: usize, copies: usize) -> Result<Vec<usize>, Error> {
    if block >= copies {
        return Err(Error::IndexOutOfRange {
            index: block,
            limit: copies,
        });
    }
    Ok((block * n..(block + 1) * n).collect())
}

fn embedded_logical(
    code: &QuantumCode,
    label: LogicalLabel,
    copies: usize,
) -> Result<PauliString, Error> {
    let op = match label.kind {
        LogicalKind::X => code.logical_x(),
        LogicalKind::Z => code.logical_z(),
    }
    .get(label.index)
    .ok_or(Error::IndexOutOfRange {
        index: label.index,
        limit: code.k(),
    })?;
    op.embed(
        &block_columns(label.block, code.n(), copies)?,
        code.n() * copies,
    )
}

/// Check that a circuit implements the expected logical action on `copies`
/// code blocks: every embedded stabilizer generator must map into the
/// combined stabilizer group, and each source logical must map to its
/// expected target modulo that group.
pub fn verify_logical_circuit(
    circuit: &CliffordCircuit,
    code: &QuantumCode,
    copies: usize,
    expected: &LogicalMap,
) -> Result<bool, Error> {
    let n_full = code.n() * copies;
    if circuit.n() != n_full {
        return Err(Error::WidthMismatch {
            expected: n_full,
            found: circuit.n(),
        });
    }
    let mut full_rows = Vec::new();
    for block in 0..copies {
        let cols = block_columns(block, code.n(), copies)?;
        for row in code.stabilizer().iter() {
            full_rows.push(row.embed(&cols, n_full)?);
        }
    }
    let full_stab = CheckMatrix::from_rows(full_rows)?;

    for row in full_stab.iter() {
        let image = circuit.conjugate(row)?;
        if !full_stab.group_contains(&image)? {
            return Ok(false);
        }
    }

    for (source, targets) in expected {
        let src = embedded_logical(code, *source, copies)?;
        let mut want = PauliString::identity(n_full)?;
        for t in targets {
            want = want.mul(&embedded_logical(code, *t, copies)?)?;
        }
        let image = circuit.conjugate(&src)?;
        if !full_stab.group_contains(&image.mul(&want)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
