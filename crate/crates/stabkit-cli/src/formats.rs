//! Text file formats: code files, generator lists, classical 0/1 matrices,
//! circuits, and reduction scripts. All qubit and row labels in the text
//! formats are 1-based; `#` starts a comment anywhere on a line.

use stabkit::clifford::{CliffordCircuit, CliffordGate};
use stabkit::stabilizer::QuantumCode;
use stabkit::symplectic::{BitMatrix, CheckMatrix, PauliString};
use stabkit::synthesis::ReductionStep;

/// Parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

/// Parse a code file with `[stabilizer]`, `[gauge]`, `[logical_x]`,
/// `[logical_z]`, and `[bob_columns]` sections.
pub fn parse_code(text: &str) -> Result<QuantumCode, ParseError> {
    #[derive(PartialEq, Clone, Copy)]
    enum Section {
        None,
        Stabilizer,
        Gauge,
        LogicalX,
        LogicalZ,
        BobColumns,
    }
    let mut section = Section::None;
    let mut stab: Vec<PauliString> = Vec::new();
    let mut gauge: Vec<PauliString> = Vec::new();
    let mut lx: Vec<PauliString> = Vec::new();
    let mut lz: Vec<PauliString> = Vec::new();
    let mut bob: Vec<usize> = Vec::new();

    for (line, s) in content_lines(text) {
        if let Some(name) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            section = match name {
                "stabilizer" => Section::Stabilizer,
                "gauge" => Section::Gauge,
                "logical_x" => Section::LogicalX,
                "logical_z" => Section::LogicalZ,
                "bob_columns" => Section::BobColumns,
                other => return Err(err(line, format!("unknown section [{other}]"))),
            };
            continue;
        }
        match section {
            Section::None => return Err(err(line, "content before any section header")),
            Section::BobColumns => {
                let q: usize = s
                    .parse()
                    .map_err(|_| err(line, format!("expected a qubit number, got '{s}'")))?;
                if q == 0 {
                    return Err(err(line, "qubit labels are 1-based"));
                }
                bob.push(q - 1);
            }
            _ => {
                let p: PauliString = s
                    .parse()
                    .map_err(|e| err(line, format!("bad Pauli row: {e}")))?;
                match section {
                    Section::Stabilizer => stab.push(p),
                    Section::Gauge => gauge.push(p),
                    Section::LogicalX => lx.push(p),
                    Section::LogicalZ => lz.push(p),
                    _ => unreachable!(),
                }
            }
        }
    }
    if stab.is_empty() {
        return Err(err(0, "code file has no [stabilizer] rows"));
    }
    let stabilizer =
        CheckMatrix::from_rows(stab).map_err(|e| err(0, format!("stabilizer: {e}")))?;
    let gauge = if gauge.is_empty() {
        None
    } else {
        Some(CheckMatrix::from_rows(gauge).map_err(|e| err(0, format!("gauge: {e}")))?)
    };
    QuantumCode::from_parts(stabilizer, gauge, lx, lz, &bob)
        .map_err(|e| err(0, format!("{e}")))
}

/// Emit a code file; inverse of [`parse_code`].
pub fn emit_code(code: &QuantumCode) -> String {
    let mut out = String::new();
    out.push_str("[stabilizer]\n");
    for row in code.stabilizer().iter() {
        out.push_str(&format!("{row}\n"));
    }
    if !code.gauge().is_empty() {
        out.push_str("[gauge]\n");
        for row in code.gauge().iter() {
            out.push_str(&format!("{row}\n"));
        }
    }
    if !code.logical_x().is_empty() {
        out.push_str("[logical_x]\n");
        for row in code.logical_x() {
            out.push_str(&format!("{row}\n"));
        }
        out.push_str("[logical_z]\n");
        for row in code.logical_z() {
            out.push_str(&format!("{row}\n"));
        }
    }
    if !code.bob_columns().is_empty() {
        out.push_str("[bob_columns]\n");
        for c in code.bob_columns() {
            out.push_str(&format!("{}\n", c + 1));
        }
    }
    out
}

/// Parse a bare generator list: one Pauli row per line.
pub fn parse_generators(text: &str) -> Result<CheckMatrix, ParseError> {
    let mut rows = Vec::new();
    for (line, s) in content_lines(text) {
        rows.push(
            s.parse::<PauliString>()
                .map_err(|e| err(line, format!("bad Pauli row: {e}")))?,
        );
    }
    CheckMatrix::from_rows(rows).map_err(|e| err(0, format!("{e}")))
}

/// Parse a classical 0/1 matrix, one row per line.
pub fn parse_matrix(text: &str) -> Result<BitMatrix, ParseError> {
    let mut rows: Vec<u64> = Vec::new();
    let mut cols: Option<usize> = None;
    for (line, s) in content_lines(text) {
        if !s.chars().all(|c| c == '0' || c == '1') {
            return Err(err(line, "matrix rows must be strings of 0 and 1"));
        }
        match cols {
            None => cols = Some(s.len()),
            Some(c) if c != s.len() => {
                return Err(err(line, format!("row has {} columns, expected {c}", s.len())))
            }
            _ => {}
        }
        let word = s
            .chars()
            .enumerate()
            .fold(0u64, |acc, (i, c)| acc | (((c == '1') as u64) << i));
        rows.push(word);
    }
    let cols = cols.ok_or_else(|| err(0, "matrix file is empty"))?;
    BitMatrix::from_rows(rows, cols).map_err(|e| err(0, format!("{e}")))
}

pub fn emit_matrix(m: &BitMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.push(if m.get(r, c) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

fn parse_gate(line: usize, s: &str) -> Result<CliffordGate, ParseError> {
    let mut parts = s.split_whitespace();
    let op = parts.next().unwrap_or("");
    let mut arg = |what: &str| -> Result<usize, ParseError> {
        let raw = parts
            .next()
            .ok_or_else(|| err(line, format!("{op} needs a {what}")))?;
        let v: usize = raw
            .parse()
            .map_err(|_| err(line, format!("bad qubit '{raw}'")))?;
        if v == 0 {
            return Err(err(line, "qubit labels are 1-based"));
        }
        Ok(v - 1)
    };
    let gate = match op {
        "H" => CliffordGate::H(arg("qubit")?),
        "P" => CliffordGate::P(arg("qubit")?),
        "CNOT" => CliffordGate::Cnot(arg("control")?, arg("target")?),
        "CZ" => CliffordGate::Cz(arg("qubit")?, arg("qubit")?),
        "SWAP" => CliffordGate::Swap(arg("qubit")?, arg("qubit")?),
        other => return Err(err(line, format!("unknown gate '{other}'"))),
    };
    if parts.next().is_some() {
        return Err(err(line, "trailing tokens after gate"));
    }
    Ok(gate)
}

/// Parse a circuit file: an optional `qubits N` header, then one gate per
/// line (`H 3`, `P 2`, `CNOT 1 4`, `CZ 2 7`, `SWAP 3 5`).
pub fn parse_circuit(text: &str) -> Result<CliffordCircuit, ParseError> {
    let mut declared: Option<usize> = None;
    let mut gates: Vec<CliffordGate> = Vec::new();
    let mut first = true;
    for (line, s) in content_lines(text) {
        if first {
            first = false;
            if let Some(rest) = s.strip_prefix("qubits ") {
                declared = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| err(line, format!("bad qubit count '{rest}'")))?,
                );
                continue;
            }
        }
        gates.push(parse_gate(line, s)?);
    }
    let inferred = gates.iter().map(|g| g.max_qubit() + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(inferred).max(inferred);
    CliffordCircuit::from_gates(n.max(1), gates).map_err(|e| err(0, format!("{e}")))
}

/// Emit a circuit file with an explicit `qubits N` header so trailing idle
/// qubits survive a round trip.
pub fn emit_circuit(circuit: &CliffordCircuit) -> String {
    let mut out = format!("qubits {}\n", circuit.n());
    for g in circuit.gates() {
        out.push_str(&format!("{g}\n"));
    }
    out
}

/// Emit a reduction script: gate lines plus `ROWADD i j` / `ROWSWAP i j`.
pub fn emit_script(n: usize, steps: &[ReductionStep]) -> String {
    let mut out = format!("qubits {n}\n");
    for s in steps {
        out.push_str(&format!("{s}\n"));
    }
    out
}

/// Parse a reduction script; inverse of [`emit_script`].
pub fn parse_script(text: &str) -> Result<(usize, Vec<ReductionStep>), ParseError> {
    let mut declared: Option<usize> = None;
    let mut steps = Vec::new();
    let mut first = true;
    for (line, s) in content_lines(text) {
        if first {
            first = false;
            if let Some(rest) = s.strip_prefix("qubits ") {
                declared = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| err(line, format!("bad qubit count '{rest}'")))?,
                );
                continue;
            }
        }
        let mut parts = s.split_whitespace();
        let op = parts.next().unwrap_or("");
        if op == "ROWADD" || op == "ROWSWAP" {
            let mut arg = || -> Result<usize, ParseError> {
                let raw = parts
                    .next()
                    .ok_or_else(|| err(line, format!("{op} needs two row numbers")))?;
                let v: usize = raw
                    .parse()
                    .map_err(|_| err(line, format!("bad row '{raw}'")))?;
                if v == 0 {
                    return Err(err(line, "row labels are 1-based"));
                }
                Ok(v - 1)
            };
            let a = arg()?;
            let b = arg()?;
            steps.push(if op == "ROWADD" {
                ReductionStep::RowAdd { src: a, dst: b }
            } else {
                ReductionStep::RowSwap { a, b }
            });
        } else {
            steps.push(ReductionStep::Gate(parse_gate(line, s)?));
        }
    }
    let inferred = steps
        .iter()
        .filter_map(|s| match s {
            ReductionStep::Gate(g) => Some(g.max_qubit() + 1),
            _ => None,
        })
        .max()
        .unwrap_or(1);
    Ok((declared.unwrap_or(inferred).max(inferred), steps))
}
