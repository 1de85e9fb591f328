//! Reference generator tables, scripts, and ledgers for the built-in codes.
//!
//! Everything here is a frozen fixture: the six-qubit degenerate code and
//! its subsystem variant, the [[6,1,3;1]] entanglement-assisted code, the
//! [7,4,3] Hamming parity-check matrix, the logical-CNOT gate sequence, the
//! per-error anticommuting-generator ledger for the six-qubit code, and the
//! 17-stage reference reduction trace for the [[6,1,3;1]] encoder.

use alloc::vec::Vec;

use crate::clifford::{CliffordCircuit, CliffordGate};
use crate::symplectic::{Pauli, PauliString};
use crate::synthesis::ReductionStep;

/// Stabilizer generators h1..h5 of the degenerate six-qubit code.
pub const SIX_QUBIT_STABILIZER: [&str; 5] = ["YIZXXY", "ZXIIXZ", "IZXXXX", "IIIZIZ", "ZZZIZI"];

/// Logical X of the six-qubit code.
pub const SIX_QUBIT_LOGICAL_X: &str = "ZIXIXI";

/// Logical Z of the six-qubit code.
pub const SIX_QUBIT_LOGICAL_Z: &str = "IZIIZZ";

/// Gauge generators (X-type, Z-type) of the six-qubit subsystem variant;
/// the stabilizer keeps h1, h2, h3, h5 and promotes h4 into the gauge group.
pub const SIX_QUBIT_GAUGE: [&str; 2] = ["IIIXII", "IIIZIZ"];

/// Encoded generators of the [[6,1,3;1]] code, receiver column first.
pub const EA_613_STABILIZER: [&str; 6] = [
    "IZIZZZI", "IZZIIZZ", "ZZIIZIZ", "IXXIIXX", "IIXXXIX", "XXIIXIX",
];

/// Logical X of the [[6,1,3;1]] code (identity on the receiver column).
pub const EA_613_LOGICAL_X: &str = "IIIIXXX";

/// Logical Z of the [[6,1,3;1]] code (identity on the receiver column).
pub const EA_613_LOGICAL_Z: &str = "IIZZIZI";

/// Column held by the receiver in the [[6,1,3;1]] tables (0-based).
pub const EA_613_BOB_COLUMN: usize = 0;

/// Parity check matrix of the [7,4,3] Hamming code, one row per string.
pub const HAMMING_7_4: [&str; 3] = ["1001011", "0101101", "0010111"];

/// The six non-commuting CSS generator rows obtained from the truncated
/// Hamming matrix (Z-type rows above X-type rows).
pub const CSS_SIX_QUBIT_ROWS: [&str; 6] = [
    "ZIIZIZ", "IZIZZI", "IIZIZZ", "XIIXIX", "IXIXXI", "IIXIXX",
];

/// The logical CNOT between two six-qubit blocks: qubits 1-6 are the source
/// block, 7-12 the target block (1-based labels).
pub fn logical_cnot_circuit() -> CliffordCircuit {
    CliffordCircuit::from_gates(
        12,
        alloc::vec![
            CliffordGate::Cz(1, 6),
            CliffordGate::Cz(4, 6),
            CliffordGate::Cz(5, 6),
            CliffordGate::Cnot(0, 8),
            CliffordGate::Cnot(2, 8),
            CliffordGate::Cnot(3, 8),
            CliffordGate::Cnot(1, 10),
            CliffordGate::Cnot(3, 10),
            CliffordGate::Cnot(4, 10),
        ],
    )
    .expect("gate indices fit 12 qubits")
}

/// Ledger of anticommuting generators for the six-qubit code: every distinct
/// single-qubit error and error pair together with a generator index (1-based
/// h1..h5) that anticommutes with it. Exceptions: Z4Z6 equals h4 itself and
/// lies in the stabilizer (gauge group of the subsystem variant), and X4 and
/// Y4Z6 also lie in the gauge group of the subsystem variant even though the
/// listed generator genuinely anticommutes in the standard code.
pub const ERROR_PAIR_LEDGER: [(&str, usize); 153] = [
    ("X1X2", 1), ("X1X3", 2), ("X1X4", 1), ("X1X5", 1), ("X1X6", 5),
    ("X1Y2", 1), ("X1Y3", 2), ("X1Y4", 2), ("X1Y5", 3), ("X1Y6", 1),
    ("X1Z2", 1), ("X1Z3", 1), ("X1Z4", 2), ("X1Z5", 3), ("X1Z6", 2),
    ("X2X3", 1), ("X2X4", 3), ("X2X5", 3), ("X2X6", 1), ("X2Y3", 1),
    ("X2Y4", 1), ("X2Y5", 1), ("X2Y6", 2), ("X2Z3", 5), ("X2Z4", 1),
    ("X2Z5", 1), ("X2Z6", 1), ("X3X4", 1), ("X3X5", 1), ("X3X6", 2),
    ("X3Y4", 3), ("X3Y5", 2), ("X3Y6", 1), ("X3Z4", 3), ("X3Z5", 2),
    ("X3Z6", 3), ("X4X5", 5), ("X4X6", 1), ("X4Y5", 1), ("X4Y6", 2),
    ("X4Z5", 1), ("X4Z6", 1), ("X5X6", 1), ("X5Y6", 2), ("X5Z6", 1),
    ("Y1X2", 2), ("Y1X3", 1), ("Y1X4", 2), ("Y1X5", 2), ("Y1X6", 1),
    ("Y1Y2", 3), ("Y1Y3", 1), ("Y1Y4", 1), ("Y1Y5", 1), ("Y1Y6", 3),
    ("Y1Z2", 5), ("Y1Z3", 2), ("Y1Z4", 1), ("Y1Z5", 1), ("Y1Z6", 1),
    ("Y2X3", 1), ("Y2X4", 2), ("Y2X5", 2), ("Y2X6", 1), ("Y2Y3", 1),
    ("Y2Y4", 1), ("Y2Y5", 1), ("Y2Y6", 5), ("Y2Z3", 5), ("Y2Z4", 1),
    ("Y2Z5", 1), ("Y2Z6", 1), ("Y3X4", 1), ("Y3X5", 1), ("Y3X6", 2),
    ("Y3Y4", 5), ("Y3Y5", 2), ("Y3Y6", 1), ("Y3Z4", 5), ("Y3Z5", 2),
    ("Y3Z6", 5), ("Y4X5", 1), ("Y4X6", 2), ("Y4Y5", 2), ("Y4Y6", 1),
    ("Y4Z5", 2), ("Y4Z6", 4), ("Y5X6", 3), ("Y5Y6", 1), ("Y5Z6", 2),
    ("Z1X2", 1), ("Z1X3", 5), ("Z1X4", 1), ("Z1X5", 1), ("Z1X6", 2),
    ("Z1Y2", 1), ("Z1Y3", 3), ("Z1Y4", 3), ("Z1Y5", 2), ("Z1Y6", 1),
    ("Z1Z2", 1), ("Z1Z3", 1), ("Z1Z4", 3), ("Z1Z5", 2), ("Z1Z6", 3),
    ("Z2X3", 1), ("Z2X4", 2), ("Z2X5", 2), ("Z2X6", 1), ("Z2Y3", 1),
    ("Z2Y4", 1), ("Z2Y5", 1), ("Z2Y6", 3), ("Z2Z3", 2), ("Z2Z4", 1),
    ("Z2Z5", 1), ("Z2Z6", 1), ("Z3X4", 3), ("Z3X5", 3), ("Z3X6", 1),
    ("Z3Y4", 1), ("Z3Y5", 1), ("Z3Y6", 2), ("Z3Z4", 1), ("Z3Z5", 1),
    ("Z3Z6", 1), ("Z4X5", 1), ("Z4X6", 2), ("Z4Y5", 2), ("Z4Y6", 1),
    ("Z4Z5", 2), ("Z4Z6", 4), ("Z5X6", 3), ("Z5Y6", 1), ("Z5Z6", 2),
    ("X1", 1), ("X2", 3), ("X3", 1), ("X4", 4), ("X5", 5), ("X6", 1),
    ("Y1", 2), ("Y2", 2), ("Y3", 3), ("Y4", 3), ("Y5", 3), ("Y6", 3),
    ("Z1", 1), ("Z2", 2), ("Z3", 3), ("Z4", 3), ("Z5", 3), ("Z6", 1),
];

/// Ledger entries that lie in the gauge group of the subsystem variant.
pub const GAUGE_LEDGER_ENTRIES: [&str; 3] = ["X4", "Z4Z6", "Y4Z6"];

/// Parse a support-notation error label like `"X1X2"`, `"Z4Z6"`, or `"X4"`
/// into a six-qubit Pauli string.
pub fn parse_error_label(label: &str, n: usize) -> Result<PauliString, crate::Error> {
    let mut p = PauliString::identity(n)?;
    let mut chars = label.chars();
    loop {
        let Some(letter) = chars.next() else {
            break;
        };
        let letter = Pauli::from_symbol(letter)?;
        let Some(digit) = chars.next().and_then(|d| d.to_digit(10)) else {
            return Err(crate::Error::usage(alloc::format!(
                "malformed error label '{label}'"
            )));
        };
        let qubit = digit as usize;
        if qubit == 0 || qubit > n {
            return Err(crate::Error::IndexOutOfRange {
                index: qubit,
                limit: n,
            });
        }
        p = p.mul(&PauliString::single(n, qubit - 1, letter)?)?;
    }
    Ok(p)
}

/// One stage of the reference encoder reduction: the steps applied and the
/// expected binary Z|X matrix afterwards, given as (Z bits, X bits) row
/// strings over the six sender columns.
pub struct TraceStage {
    pub steps: Vec<ReductionStep>,
    pub expected: [(&'static str, &'static str); 6],
}

const fn h(q: usize) -> ReductionStep {
    ReductionStep::Gate(CliffordGate::H(q))
}

const fn cnot(c: usize, t: usize) -> ReductionStep {
    ReductionStep::Gate(CliffordGate::Cnot(c, t))
}

const fn swap(a: usize, b: usize) -> ReductionStep {
    ReductionStep::Gate(CliffordGate::Swap(a, b))
}

/// Starting matrix of the reference reduction for the [[6,1,3;1]] encoder:
/// the sender-side generators in binary Z|X form, ebit pair in rows 1 and 6.
pub const ENCODER_TRACE_START: [(&str, &str); 6] = [
    ("100101", "000000"),
    ("101110", "000000"),
    ("110011", "000000"),
    ("000000", "110011"),
    ("000000", "101110"),
    ("000000", "100101"),
];

/// The sixteen stages of the reference reduction. Stages 4 and 6 carry two
/// free row additions that clear the finished pivot column; stage 10's
/// expected matrix is the unique intermediate consistent with its neighbors
/// under the stated gates.
pub fn encoder_reference_trace() -> Vec<TraceStage> {
    alloc::vec![
        TraceStage {
            steps: alloc::vec![ReductionStep::RowSwap { a: 1, b: 5 }],
            expected: [
                ("100101", "000000"),
                ("000000", "100101"),
                ("110011", "000000"),
                ("000000", "110011"),
                ("000000", "101110"),
                ("101110", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(0), h(3), h(5)],
            expected: [
                ("000000", "100101"),
                ("100101", "000000"),
                ("010010", "100001"),
                ("100001", "010010"),
                ("100100", "001010"),
                ("001010", "100100"),
            ],
        },
        TraceStage {
            steps: alloc::vec![cnot(0, 3), cnot(0, 5)],
            expected: [
                ("000000", "100000"),
                ("100101", "000000"),
                ("010010", "100100"),
                ("000001", "010010"),
                ("000100", "001010"),
                ("001010", "100001"),
            ],
        },
        TraceStage {
            steps: alloc::vec![
                h(0),
                ReductionStep::RowAdd { src: 0, dst: 2 },
                ReductionStep::RowAdd { src: 0, dst: 5 },
            ],
            expected: [
                ("100000", "000000"),
                ("000101", "100000"),
                ("010010", "000100"),
                ("000001", "010010"),
                ("000100", "001010"),
                ("001010", "000001"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(3), h(5)],
            expected: [
                ("100000", "000000"),
                ("000000", "100101"),
                ("010110", "000000"),
                ("000000", "010011"),
                ("000000", "001110"),
                ("001011", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![
                cnot(0, 3),
                cnot(0, 5),
                ReductionStep::RowAdd { src: 0, dst: 2 },
                ReductionStep::RowAdd { src: 0, dst: 5 },
            ],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010110", "000000"),
                ("000000", "010011"),
                ("000000", "001110"),
                ("001011", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(1), h(3), h(4)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("000000", "010110"),
                ("010010", "000001"),
                ("000110", "001000"),
                ("001001", "000010"),
            ],
        },
        TraceStage {
            steps: alloc::vec![cnot(1, 3), cnot(1, 4)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("000000", "010000"),
                ("000010", "000001"),
                ("000110", "001000"),
                ("001001", "000010"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(1)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("000010", "000001"),
                ("000110", "001000"),
                ("001001", "000010"),
            ],
        },
        TraceStage {
            steps: alloc::vec![swap(2, 4)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000001"),
                ("001100", "000010"),
                ("000011", "001000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(2), cnot(2, 5), h(2)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000000"),
                ("001100", "000011"),
                ("000011", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![ReductionStep::RowAdd { src: 3, dst: 4 }],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000000"),
                ("000100", "000011"),
                ("000011", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(3), cnot(3, 4), cnot(3, 5)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000000"),
                ("000000", "000100"),
                ("000011", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(3)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000000"),
                ("000100", "000000"),
                ("000011", "000000"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(4), h(5), cnot(4, 5)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000000"),
                ("000100", "000000"),
                ("000000", "000010"),
            ],
        },
        TraceStage {
            steps: alloc::vec![h(4)],
            expected: [
                ("100000", "000000"),
                ("000000", "100000"),
                ("010000", "000000"),
                ("001000", "000000"),
                ("000100", "000000"),
                ("000010", "000000"),
            ],
        },
    ]
}

/// Decode a trace row (Z bits, X bits) into a Pauli string.
pub fn trace_row(z: &str, x: &str) -> PauliString {
    let n = z.len();
    let to_bits = |s: &str| {
        s.chars()
            .enumerate()
            .fold(0u64, |acc, (i, ch)| acc | (((ch == '1') as u64) << i))
    };
    PauliString::from_bits(n, to_bits(x), to_bits(z)).expect("fixture rows are well-formed")
}
