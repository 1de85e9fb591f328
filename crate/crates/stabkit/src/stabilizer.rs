//! Quantum code objects and error-correction verification.
//!
//! A [`QuantumCode`] bundles a stabilizer, an optional gauge group (as an
//! even list of rows, one anticommuting pair per gauge qubit), logical X/Z
//! pairs, and the set of columns held by the receiver for
//! entanglement-assisted codes. The checker classifies every error product
//! as detected (anticommutes with a generator), harmless (in the stabilizer
//! or the gauge group), or a failure.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::symplectic::{CheckMatrix, Pauli, PauliString};
use crate::tables;

/// A stabilizer, subsystem, or entanglement-assisted code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCode {
    n: usize,
    k: usize,
    bob_columns: BTreeSet<usize>,
    stabilizer: CheckMatrix,
    gauge: CheckMatrix,
    logical_x: Vec<PauliString>,
    logical_z: Vec<PauliString>,
}

/// First violated invariant found by [`QuantumCode::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeDefect {
    AnticommutingStabilizerRows { i: usize, j: usize },
    DependentStabilizerRows,
    GaugeRowCountOdd { rows: usize },
    GaugeStabilizerAnticommute { gauge_row: usize, stabilizer_row: usize },
    RegisterMismatch { stabilizer_rows: usize, gauge_qubits: usize, k: usize, n: usize },
    LogicalPairBroken { i: usize, j: usize },
    LogicalHitsStabilizer { logical: usize, stabilizer_row: usize },
    LogicalHitsGauge { logical: usize, gauge_row: usize },
}

impl fmt::Display for CodeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeDefect::AnticommutingStabilizerRows { i, j } => {
                write!(f, "stabilizer rows {} and {} anticommute", i + 1, j + 1)
            }
            CodeDefect::DependentStabilizerRows => write!(f, "stabilizer rows are dependent"),
            CodeDefect::GaugeRowCountOdd { rows } => {
                write!(f, "gauge list has {rows} rows; expected one X/Z pair per gauge qubit")
            }
            CodeDefect::GaugeStabilizerAnticommute {
                gauge_row,
                stabilizer_row,
            } => write!(
                f,
                "gauge row {} anticommutes with stabilizer row {}",
                gauge_row + 1,
                stabilizer_row + 1
            ),
            CodeDefect::RegisterMismatch {
                stabilizer_rows,
                gauge_qubits,
                k,
                n,
            } => write!(
                f,
                "{stabilizer_rows} stabilizer rows + {gauge_qubits} gauge qubits + {k} logical qubits != {n} qubits"
            ),
            CodeDefect::LogicalPairBroken { i, j } => write!(
                f,
                "logical X{} / Z{} pair algebra is broken",
                i + 1,
                j + 1
            ),
            CodeDefect::LogicalHitsStabilizer {
                logical,
                stabilizer_row,
            } => write!(
                f,
                "logical operator {} anticommutes with stabilizer row {}",
                logical + 1,
                stabilizer_row + 1
            ),
            CodeDefect::LogicalHitsGauge { logical, gauge_row } => write!(
                f,
                "logical operator {} anticommutes with gauge row {}",
                logical + 1,
                gauge_row + 1
            ),
        }
    }
}

impl QuantumCode {
    /// Assemble a code from explicit parts. Widths and counts are checked;
    /// the group-theoretic invariants are left to [`QuantumCode::validate`].
    pub fn from_parts(
        stabilizer: CheckMatrix,
        gauge: Option<CheckMatrix>,
        logical_x: Vec<PauliString>,
        logical_z: Vec<PauliString>,
        bob_columns: &[usize],
    ) -> Result<Self, Error> {
        let n = stabilizer.n();
        let gauge = match gauge {
            Some(g) => {
                if g.n() != n {
                    return Err(Error::WidthMismatch {
                        expected: n,
                        found: g.n(),
                    });
                }
                g
            }
            None => CheckMatrix::empty(n)?,
        };
        if logical_x.len() != logical_z.len() {
            return Err(Error::usage(format!(
                "{} logical X rows but {} logical Z rows",
                logical_x.len(),
                logical_z.len()
            )));
        }
        for p in logical_x.iter().chain(&logical_z) {
            if p.n() != n {
                return Err(Error::WidthMismatch {
                    expected: n,
                    found: p.n(),
                });
            }
        }
        let mut bob = BTreeSet::new();
        for &c in bob_columns {
            if c >= n {
                return Err(Error::IndexOutOfRange { index: c, limit: n });
            }
            bob.insert(c);
        }
        Ok(QuantumCode {
            n,
            k: logical_x.len(),
            bob_columns: bob,
            stabilizer,
            gauge,
            logical_x,
            logical_z,
        })
    }

    /// Build a code from a stabilizer alone, deriving logical operators from
    /// the centralizer.
    pub fn from_stabilizer(
        stabilizer: CheckMatrix,
        bob_columns: &[usize],
    ) -> Result<Self, Error> {
        let gauge = CheckMatrix::empty(stabilizer.n())?;
        let (logical_x, logical_z) = derive_logicals(&stabilizer, &gauge)?;
        QuantumCode::from_parts(stabilizer, None, logical_x, logical_z, bob_columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of gauge qubits (anticommuting pairs in the gauge list).
    pub fn gauge_qubits(&self) -> usize {
        self.gauge.len() / 2
    }

    pub fn ebits(&self) -> usize {
        self.bob_columns.len()
    }

    pub fn bob_columns(&self) -> &BTreeSet<usize> {
        &self.bob_columns
    }

    /// Sender columns, in increasing order.
    pub fn alice_columns(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|c| !self.bob_columns.contains(c))
            .collect()
    }

    pub fn stabilizer(&self) -> &CheckMatrix {
        &self.stabilizer
    }

    pub fn gauge(&self) -> &CheckMatrix {
        &self.gauge
    }

    pub fn logical_x(&self) -> &[PauliString] {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &[PauliString] {
        &self.logical_z
    }

    /// Stabilizer and gauge rows together.
    pub fn stabilizer_and_gauge(&self) -> CheckMatrix {
        self.stabilizer
            .concat(&self.gauge)
            .expect("same width by construction")
    }

    /// Check every structural invariant, reporting the first violation.
    pub fn validate(&self) -> Result<(), CodeDefect> {
        if let Some((i, j)) = self.stabilizer.first_anticommuting_pair() {
            return Err(CodeDefect::AnticommutingStabilizerRows { i, j });
        }
        if !self.stabilizer.is_independent() {
            return Err(CodeDefect::DependentStabilizerRows);
        }
        if self.gauge.len() % 2 != 0 {
            return Err(CodeDefect::GaugeRowCountOdd {
                rows: self.gauge.len(),
            });
        }
        for (gi, g) in self.gauge.iter().enumerate() {
            for (si, s) in self.stabilizer.iter().enumerate() {
                if g.sp_unchecked(s) {
                    return Err(CodeDefect::GaugeStabilizerAnticommute {
                        gauge_row: gi,
                        stabilizer_row: si,
                    });
                }
            }
        }
        let r = self.gauge_qubits();
        if self.stabilizer.len() + r + self.k != self.n {
            return Err(CodeDefect::RegisterMismatch {
                stabilizer_rows: self.stabilizer.len(),
                gauge_qubits: r,
                k: self.k,
                n: self.n,
            });
        }
        for i in 0..self.k {
            for j in 0..self.k {
                let want = i == j;
                if self.logical_x[i].sp_unchecked(&self.logical_z[j]) != want {
                    return Err(CodeDefect::LogicalPairBroken { i, j });
                }
            }
        }
        for (li, l) in self.logical_x.iter().chain(&self.logical_z).enumerate() {
            for (si, s) in self.stabilizer.iter().enumerate() {
                if l.sp_unchecked(s) {
                    return Err(CodeDefect::LogicalHitsStabilizer {
                        logical: li,
                        stabilizer_row: si,
                    });
                }
            }
            for (gi, g) in self.gauge.iter().enumerate() {
                if l.sp_unchecked(g) {
                    return Err(CodeDefect::LogicalHitsGauge {
                        logical: li,
                        gauge_row: gi,
                    });
                }
            }
        }
        Ok(())
    }
}

/// The four built-in fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinCode {
    SixQubitDegenerate,
    SixQubitSubsystem,
    Ea613,
    Steane,
}

impl BuiltinCode {
    pub const ALL: [BuiltinCode; 4] = [
        BuiltinCode::SixQubitDegenerate,
        BuiltinCode::SixQubitSubsystem,
        BuiltinCode::Ea613,
        BuiltinCode::Steane,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BuiltinCode::SixQubitDegenerate => "six_qubit_degenerate",
            BuiltinCode::SixQubitSubsystem => "six_qubit_subsystem",
            BuiltinCode::Ea613 => "ea_613",
            BuiltinCode::Steane => "steane",
        }
    }
}

impl core::str::FromStr for BuiltinCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "six_qubit_degenerate" => Ok(BuiltinCode::SixQubitDegenerate),
            "six_qubit_subsystem" => Ok(BuiltinCode::SixQubitSubsystem),
            "ea_613" => Ok(BuiltinCode::Ea613),
            "steane" => Ok(BuiltinCode::Steane),
            other => Err(Error::usage(format!(
                "unknown builtin code '{other}' (expected six_qubit_degenerate, six_qubit_subsystem, ea_613, or steane)"
            ))),
        }
    }
}

/// The exact fixture for one of the built-in codes.
pub fn builtin_code(which: BuiltinCode) -> QuantumCode {
    let parse = |s: &str| s.parse::<PauliString>().expect("fixture row");
    match which {
        BuiltinCode::SixQubitDegenerate => QuantumCode::from_parts(
            CheckMatrix::from_strs(&tables::SIX_QUBIT_STABILIZER).expect("fixture"),
            None,
            alloc::vec![parse(tables::SIX_QUBIT_LOGICAL_X)],
            alloc::vec![parse(tables::SIX_QUBIT_LOGICAL_Z)],
            &[],
        )
        .expect("fixture is well-formed"),
        BuiltinCode::SixQubitSubsystem => QuantumCode::from_parts(
            CheckMatrix::from_strs(&[
                tables::SIX_QUBIT_STABILIZER[0],
                tables::SIX_QUBIT_STABILIZER[1],
                tables::SIX_QUBIT_STABILIZER[2],
                tables::SIX_QUBIT_STABILIZER[4],
            ])
            .expect("fixture"),
            Some(CheckMatrix::from_strs(&tables::SIX_QUBIT_GAUGE).expect("fixture")),
            alloc::vec![parse(tables::SIX_QUBIT_LOGICAL_X)],
            alloc::vec![parse(tables::SIX_QUBIT_LOGICAL_Z)],
            &[],
        )
        .expect("fixture is well-formed"),
        BuiltinCode::Ea613 => QuantumCode::from_parts(
            CheckMatrix::from_strs(&tables::EA_613_STABILIZER).expect("fixture"),
            None,
            alloc::vec![parse(tables::EA_613_LOGICAL_X)],
            alloc::vec![parse(tables::EA_613_LOGICAL_Z)],
            &[tables::EA_613_BOB_COLUMN],
        )
        .expect("fixture is well-formed"),
        BuiltinCode::Steane => {
            let h = crate::cssea::hamming_7_4();
            let stab = crate::cssea::css_generators(&h, &h).expect("fixture");
            QuantumCode::from_parts(
                stab,
                None,
                alloc::vec![parse("XXXXXXX")],
                alloc::vec![parse("ZZZZZZZ")],
                &[],
            )
            .expect("fixture is well-formed")
        }
    }
}

/// All weight-1 Paulis on the given columns plus all phase-free products of
/// two distinct weight-1 Paulis, deduplicated and sorted. Same-qubit products
/// collapse back onto singles, so for m columns this has 3m + 9*C(m,2)
/// entries.
pub fn error_set_single_and_pairs(n: usize, columns: &[usize]) -> Result<Vec<PauliString>, Error> {
    let singles = single_errors(n, columns)?;
    let mut set: BTreeSet<PauliString> = singles.iter().cloned().collect();
    for i in 0..singles.len() {
        for j in (i + 1)..singles.len() {
            set.insert(singles[i].mul_unchecked(&singles[j]));
        }
    }
    Ok(set.into_iter().collect())
}

/// The weight-1 errors on the given columns, column-major with X < Y < Z.
pub fn single_errors(n: usize, columns: &[usize]) -> Result<Vec<PauliString>, Error> {
    if columns.is_empty() {
        return Err(Error::usage("error set needs at least one column"));
    }
    let mut cols: Vec<usize> = columns.to_vec();
    cols.sort_unstable();
    cols.dedup();
    let mut out = Vec::with_capacity(3 * cols.len());
    for &c in &cols {
        for letter in [Pauli::X, Pauli::Y, Pauli::Z] {
            out.push(PauliString::single(n, c, letter)?);
        }
    }
    Ok(out)
}

/// Every product the single-error conditions must cover, duplicates kept:
/// the singles themselves followed by the product of each unordered pair of
/// distinct singles. For m columns this has 3m + C(3m, 2) entries.
pub fn single_and_pair_products(n: usize, columns: &[usize]) -> Result<Vec<PauliString>, Error> {
    let singles = single_errors(n, columns)?;
    let mut out = singles.clone();
    for i in 0..singles.len() {
        for j in (i + 1)..singles.len() {
            out.push(singles[i].mul_unchecked(&singles[j]));
        }
    }
    Ok(out)
}

/// How one error product fared against the code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Detected: anticommutes with the stabilizer generator of this index
    /// (the smallest such index).
    AnticommutesWith(usize),
    /// Harmless: the product is itself a stabilizer element.
    InStabilizer,
    /// Harmless for subsystem codes: the product lies in the span of the
    /// stabilizer and gauge rows.
    InGauge,
    /// Not correctable.
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::AnticommutesWith(i) => write!(f, "anticommutes with generator {}", i + 1),
            Verdict::InStabilizer => write!(f, "in stabilizer"),
            Verdict::InGauge => write!(f, "in gauge group"),
            Verdict::Fail => write!(f, "FAIL"),
        }
    }
}

/// Outcome of [`verify_correction`]: one verdict per checked error product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionReport {
    pub checked_pairs: usize,
    pub verdicts: Vec<(PauliString, Verdict)>,
}

impl CorrectionReport {
    pub fn failures(&self) -> impl Iterator<Item = &(PauliString, Verdict)> {
        self.verdicts.iter().filter(|(_, v)| *v == Verdict::Fail)
    }

    /// The code corrects the error set iff no verdict is a failure.
    pub fn all_corrected(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Classify each error product: anticommutes with some generator (smallest
/// index reported), else in the stabilizer, else in the gauge span when a
/// gauge group is present, else a failure.
pub fn verify_correction(
    code: &QuantumCode,
    errors: &[PauliString],
) -> Result<CorrectionReport, Error> {
    let stab_rref = code.stabilizer.binary_rref();
    let full_rref = code.stabilizer_and_gauge().binary_rref();
    let has_gauge = !code.gauge.is_empty();
    let mut verdicts = Vec::with_capacity(errors.len());
    for e in errors {
        if e.n() != code.n {
            return Err(Error::WidthMismatch {
                expected: code.n,
                found: e.n(),
            });
        }
        let verdict = if let Some(i) = code
            .stabilizer
            .iter()
            .position(|g| g.sp_unchecked(e))
        {
            Verdict::AnticommutesWith(i)
        } else if stab_rref.contains(e.binary_row()) {
            Verdict::InStabilizer
        } else if has_gauge && full_rref.contains(e.binary_row()) {
            Verdict::InGauge
        } else {
            Verdict::Fail
        };
        verdicts.push((e.clone(), verdict));
    }
    Ok(CorrectionReport {
        checked_pairs: verdicts.len(),
        verdicts,
    })
}

/// Which columns a distance search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Sender columns only (the entanglement-assisted default).
    Alice,
    /// Every column, the receiver's included.
    Global,
}

pub(crate) fn for_each_weighted_pauli(
    n: usize,
    cols: &[usize],
    weight: usize,
    f: &mut dyn FnMut(&PauliString) -> Result<bool, Error>,
) -> Result<bool, Error> {
    // Column subsets in lexicographic order, letters X < Y < Z per column
    // with the leftmost slot most significant. Stops early when f says so.
    let letters = [Pauli::X, Pauli::Y, Pauli::Z];
    let mut subset: Vec<usize> = (0..weight).collect();
    loop {
        let mut assignment = alloc::vec![0usize; weight];
        loop {
            let mut p = PauliString::identity(n)?;
            for (slot, &col_idx) in subset.iter().enumerate() {
                p = p.mul(&PauliString::single(n, cols[col_idx], letters[assignment[slot]])?)?;
            }
            if f(&p)? {
                return Ok(true);
            }
            let mut advanced = false;
            for slot in (0..weight).rev() {
                if assignment[slot] < 2 {
                    assignment[slot] += 1;
                    for a in assignment.iter_mut().skip(slot + 1) {
                        *a = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        let mut advanced = false;
        for i in (0..weight).rev() {
            if subset[i] < cols.len() - weight + i {
                subset[i] += 1;
                for j in i + 1..weight {
                    subset[j] = subset[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(false);
        }
    }
}

/// Brute-force distance: the smallest weight (up to `max_weight`) of a Pauli
/// on the scoped columns that commutes with every stabilizer row but lies
/// outside the span of the stabilizer and gauge rows. Returns `None` when no
/// such operator exists up to `max_weight`.
pub fn distance(
    code: &QuantumCode,
    max_weight: usize,
    scope: Scope,
) -> Result<Option<usize>, Error> {
    let cols = match scope {
        Scope::Alice => code.alice_columns(),
        Scope::Global => (0..code.n).collect(),
    };
    if max_weight > cols.len() {
        return Err(Error::usage(format!(
            "max weight {max_weight} exceeds the {} scoped columns",
            cols.len()
        )));
    }
    let span = code.stabilizer_and_gauge().binary_rref();
    for w in 1..=max_weight {
        let mut found = false;
        for_each_weighted_pauli(code.n, &cols, w, &mut |p| {
            let commutes = code.stabilizer.iter().all(|g| !g.sp_unchecked(p));
            if commutes && !span.contains(p.binary_row()) {
                found = true;
                return Ok(true);
            }
            Ok(false)
        })?;
        if found {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Outcome of the subsystem Singleton bound n - k - r >= 2(d - 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingletonVerdict {
    Saturated,
    Satisfied,
    Violated,
}

pub fn singleton_check(n: usize, k: usize, r: usize, d: usize) -> SingletonVerdict {
    let lhs = n as i64 - k as i64 - r as i64;
    let rhs = 2 * (d as i64 - 1);
    match lhs.cmp(&rhs) {
        core::cmp::Ordering::Equal => SingletonVerdict::Saturated,
        core::cmp::Ordering::Greater => SingletonVerdict::Satisfied,
        core::cmp::Ordering::Less => SingletonVerdict::Violated,
    }
}

/// Promote one stabilizer row into the gauge group, pairing it with a
/// supplied conjugate partner that anticommutes with it and commutes with
/// every other stabilizer row. The partner is listed first (X-type slot) to
/// match the printed gauge tables.
pub fn to_subsystem(
    code: &QuantumCode,
    promote: usize,
    partner: &PauliString,
) -> Result<QuantumCode, Error> {
    if promote >= code.stabilizer.len() {
        return Err(Error::IndexOutOfRange {
            index: promote,
            limit: code.stabilizer.len(),
        });
    }
    if partner.n() != code.n {
        return Err(Error::WidthMismatch {
            expected: code.n,
            found: partner.n(),
        });
    }
    let promoted = code.stabilizer.row(promote).clone();
    if !partner.sp_unchecked(&promoted) {
        return Err(Error::structure(
            "conjugate partner must anticommute with the promoted row",
        ));
    }
    for (i, row) in code.stabilizer.iter().enumerate() {
        if i != promote && partner.sp_unchecked(row) {
            return Err(Error::structure(format!(
                "conjugate partner anticommutes with remaining stabilizer row {}",
                i + 1
            )));
        }
    }
    let mut new_stab = CheckMatrix::empty(code.n)?;
    for (i, row) in code.stabilizer.iter().enumerate() {
        if i != promote {
            new_stab.push(row.clone())?;
        }
    }
    let mut new_gauge = code.gauge.clone();
    new_gauge.push(partner.clone())?;
    new_gauge.push(promoted)?;
    let out = QuantumCode::from_parts(
        new_stab,
        Some(new_gauge),
        code.logical_x.clone(),
        code.logical_z.clone(),
        &code.bob_columns.iter().copied().collect::<Vec<_>>(),
    )?;
    out.validate()
        .map_err(|d| Error::structure(format!("promotion breaks the code: {d}")))?;
    Ok(out)
}

/// Derive logical X/Z pairs from the centralizer of the stabilizer and gauge
/// rows, quotienting by their span. For one logical qubit the result is
/// polished deterministically: a pure-X / pure-Z pair when one exists (CSS
/// codes), otherwise the lexicographically smallest anticommuting pair.
pub fn derive_logicals(
    stabilizer: &CheckMatrix,
    gauge: &CheckMatrix,
) -> Result<(Vec<PauliString>, Vec<PauliString>), Error> {
    let n = stabilizer.n();
    let constraints = stabilizer.concat(gauge)?;
    let span = constraints.binary_rref();
    let centralizer = constraints.centralizer_basis();

    // Representatives independent modulo the stabilizer/gauge span.
    let mut reps: Vec<PauliString> = Vec::new();
    let mut accum = span.clone();
    for v in centralizer {
        if accum.contains(v.binary_row()) {
            continue;
        }
        let mut rows: Vec<u64> = (0..accum.rank).map(|i| accum.matrix.row(i)).collect();
        rows.push(v.binary_row());
        accum = crate::symplectic::BitMatrix::from_rows(rows, 2 * n)?.rref();
        reps.push(v);
    }
    if reps.len() % 2 != 0 {
        return Err(Error::structure(
            "centralizer quotient has odd dimension; generators are inconsistent",
        ));
    }
    let k = reps.len() / 2;
    if k == 0 {
        return Ok((Vec::new(), Vec::new()));
    }

    if k == 1 && span.rank + 2 <= 16 {
        return derive_single_logical_pair(stabilizer, gauge, &reps);
    }

    // General case: symplectic pairing of the representatives.
    let rep_matrix = CheckMatrix::from_rows(reps)?;
    let out = crate::synthesis::symplectic_gram_schmidt(&rep_matrix)?;
    if out.pairs.len() != k || !out.isotropic.is_empty() {
        return Err(Error::structure(
            "centralizer quotient is degenerate; generators are inconsistent",
        ));
    }
    let (xs, zs) = out.pairs.into_iter().unzip();
    Ok((xs, zs))
}

fn derive_single_logical_pair(
    stabilizer: &CheckMatrix,
    gauge: &CheckMatrix,
    reps: &[PauliString],
) -> Result<(Vec<PauliString>, Vec<PauliString>), Error> {
    let constraints = stabilizer.concat(gauge)?;
    let span = constraints.binary_rref();
    // Every logical candidate: stabilizer multiples of the nontrivial
    // representative combinations.
    let span_members = constraints.span_elements()?;
    let mut candidates: Vec<PauliString> = Vec::new();
    for sel in 1u64..4 {
        let mut base = PauliString::identity(stabilizer.n())?;
        for (i, r) in reps.iter().enumerate() {
            if (sel >> i) & 1 == 1 {
                base = base.mul_unchecked(r);
            }
        }
        for s in &span_members {
            let c = base.mul_unchecked(s);
            if !span.contains(c.binary_row()) {
                candidates.push(c);
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    let pure_x = candidates.iter().find(|c| c.z_bits() == 0).cloned();
    let pure_z = candidates.iter().find(|c| c.x_bits() == 0).cloned();
    if let (Some(x), Some(z)) = (&pure_x, &pure_z) {
        if x.sp_unchecked(z) {
            return Ok((alloc::vec![x.clone()], alloc::vec![z.clone()]));
        }
    }
    let first = candidates
        .first()
        .ok_or_else(|| Error::structure("no logical candidates found"))?
        .clone();
    let second = candidates
        .iter()
        .find(|c| c.sp_unchecked(&first))
        .ok_or_else(|| Error::structure("no anticommuting logical partner found"))?
        .clone();
    Ok((alloc::vec![first], alloc::vec![second]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn builtin_fixtures_are_exact() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        assert_eq!(code.stabilizer().row(0), &p("YIZXXY"));
        assert_eq!(code.n(), 6);
        assert_eq!(code.k(), 1);

        let ea = builtin_code(BuiltinCode::Ea613);
        assert_eq!(ea.stabilizer().row(0), &p("IZIZZZI"));
        assert_eq!(ea.bob_columns().iter().copied().collect::<Vec<_>>(), [0]);
        assert_eq!(ea.n(), 7);

        let sub = builtin_code(BuiltinCode::SixQubitSubsystem);
        assert_eq!(sub.gauge().row(0), &p("IIIXII"));
        assert_eq!(sub.gauge().row(1), &p("IIIZIZ"));
        assert_eq!(sub.gauge_qubits(), 1);
    }

    #[test]
    fn every_builtin_validates() {
        for which in BuiltinCode::ALL {
            builtin_code(which).validate().unwrap_or_else(|d| {
                panic!("{which:?}: {d}");
            });
        }
    }

    #[test]
    fn duplicated_row_breaks_independence() {
        let mut rows = CheckMatrix::from_strs(&tables::SIX_QUBIT_STABILIZER).unwrap();
        rows.push(p("YIZXXY")).unwrap();
        let code = QuantumCode::from_parts(
            rows,
            None,
            alloc::vec![p(tables::SIX_QUBIT_LOGICAL_X)],
            alloc::vec![p(tables::SIX_QUBIT_LOGICAL_Z)],
            &[],
        )
        .unwrap();
        assert!(matches!(
            code.validate(),
            Err(CodeDefect::DependentStabilizerRows)
        ));
    }

    #[test]
    fn replacing_h4_by_x1_breaks_commutation() {
        let rows = CheckMatrix::from_strs(&["YIZXXY", "ZXIIXZ", "IZXXXX", "XIIIII", "ZZZIZI"])
            .unwrap();
        let code = QuantumCode::from_parts(
            rows,
            None,
            alloc::vec![p(tables::SIX_QUBIT_LOGICAL_X)],
            alloc::vec![p(tables::SIX_QUBIT_LOGICAL_Z)],
            &[],
        )
        .unwrap();
        match code.validate() {
            Err(CodeDefect::AnticommutingStabilizerRows { j, .. }) => assert_eq!(j, 3),
            other => panic!("expected anticommutation defect, got {other:?}"),
        }
    }

    #[test]
    fn error_set_counts_match_the_census() {
        let all: Vec<usize> = (0..6).collect();
        let singles = single_errors(6, &all).unwrap();
        assert_eq!(singles.len(), 18);
        let set = error_set_single_and_pairs(6, &all).unwrap();
        assert_eq!(set.len(), 153);
        assert!(set.contains(&p("IIIZIZ"))); // Z4Z6
        let products = single_and_pair_products(6, &all).unwrap();
        assert_eq!(products.len(), 171);
    }

    #[test]
    fn single_column_error_set_is_just_the_letters() {
        let set = error_set_single_and_pairs(1, &[0]).unwrap();
        assert_eq!(set, alloc::vec![p("X"), p("Y"), p("Z")]);
        assert!(error_set_single_and_pairs(1, &[]).is_err());
    }

    #[test]
    fn six_qubit_code_corrects_the_full_set() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        let all: Vec<usize> = (0..6).collect();
        let report =
            verify_correction(&code, &single_and_pair_products(6, &all).unwrap()).unwrap();
        assert_eq!(report.checked_pairs, 171);
        assert!(report.all_corrected());

        let x1x2 = verify_correction(&code, &[p("XXIIII")]).unwrap();
        assert_eq!(x1x2.verdicts[0].1, Verdict::AnticommutesWith(0));
        let z4z6 = verify_correction(&code, &[p("IIIZIZ")]).unwrap();
        assert_eq!(z4z6.verdicts[0].1, Verdict::InStabilizer);
    }

    #[test]
    fn subsystem_variant_classifies_gauge_errors() {
        let code = builtin_code(BuiltinCode::SixQubitSubsystem);
        let report = verify_correction(
            &code,
            &[p("IIIXII"), p("IIIZIZ"), p("IIIYIZ")],
        )
        .unwrap();
        for (e, v) in &report.verdicts {
            assert_eq!(*v, Verdict::InGauge, "{e}");
        }
        let all: Vec<usize> = (0..6).collect();
        let full =
            verify_correction(&code, &single_and_pair_products(6, &all).unwrap()).unwrap();
        assert!(full.all_corrected());
    }

    #[test]
    fn anticommuting_verdicts_point_at_a_real_witness() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        let all: Vec<usize> = (0..6).collect();
        let report =
            verify_correction(&code, &error_set_single_and_pairs(6, &all).unwrap()).unwrap();
        for (e, v) in &report.verdicts {
            if let Verdict::AnticommutesWith(i) = v {
                assert!(e.sp_unchecked(code.stabilizer().row(*i)), "{e}");
            }
        }
    }

    #[test]
    fn six_qubit_distance_is_three() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        assert_eq!(distance(&code, 6, Scope::Global).unwrap(), Some(3));
    }

    #[test]
    fn two_qubit_xx_code_has_distance_one() {
        let stab = CheckMatrix::from_strs(&["XX"]).unwrap();
        let code = QuantumCode::from_stabilizer(stab, &[]).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(distance(&code, 2, Scope::Global).unwrap(), Some(1));
    }

    #[test]
    fn subsystem_variant_keeps_distance_three() {
        // Dressed distance: operators in the gauge span do not count as
        // logicals, so the promoted code still has distance 3.
        let code = builtin_code(BuiltinCode::SixQubitSubsystem);
        assert_eq!(distance(&code, 6, Scope::Global).unwrap(), Some(3));
    }

    #[test]
    fn distance_not_found_reports_none() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        assert_eq!(distance(&code, 2, Scope::Global).unwrap(), None);
        assert!(distance(&code, 7, Scope::Global).is_err());
    }

    #[test]
    fn distance_is_invariant_under_row_operations() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        let mut rows = code.stabilizer().rows().to_vec();
        rows[0] = rows[0].mul(&rows[1]).unwrap().mul(&rows[4]).unwrap();
        rows.swap(2, 3);
        let mixed = QuantumCode::from_parts(
            CheckMatrix::from_rows(rows).unwrap(),
            None,
            code.logical_x().to_vec(),
            code.logical_z().to_vec(),
            &[],
        )
        .unwrap();
        assert!(mixed.stabilizer().group_equal(code.stabilizer()).unwrap());
        assert_eq!(
            distance(&mixed, 6, Scope::Global).unwrap(),
            distance(&code, 6, Scope::Global).unwrap()
        );
    }

    #[test]
    fn singleton_bound_cases() {
        assert_eq!(singleton_check(6, 1, 1, 3), SingletonVerdict::Saturated);
        assert_eq!(singleton_check(7, 1, 0, 3), SingletonVerdict::Satisfied);
        assert_eq!(singleton_check(5, 1, 1, 3), SingletonVerdict::Violated);
    }

    #[test]
    fn promoting_h4_with_x4_yields_the_subsystem_fixture() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        let partner = p("IIIXII");
        let sub = to_subsystem(&code, 3, &partner).unwrap();
        let fixture = builtin_code(BuiltinCode::SixQubitSubsystem);
        assert_eq!(sub, fixture);
    }

    #[test]
    fn promotion_with_commuting_partner_fails() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        // Z4Z6 is h4 itself; it commutes with the promoted row.
        assert!(matches!(
            to_subsystem(&code, 3, &p("IIIZIZ")),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn derived_logicals_for_the_steane_group_are_css() {
        let code = builtin_code(BuiltinCode::Steane);
        let (xs, zs) = derive_logicals(code.stabilizer(), code.gauge()).unwrap();
        assert_eq!(xs.len(), 1);
        assert!(xs[0].z_bits() == 0);
        assert!(zs[0].x_bits() == 0);
        assert!(xs[0].sp_unchecked(&zs[0]));
        assert!(code.stabilizer().commutes_with_all(&xs[0]).unwrap());
    }
}
