//! Small dense state-vector simulation, used as the sign-exact oracle layer.
//!
//! Basis ordering puts qubit 1 (column 0) on the most significant bit, so a
//! ket label read left to right is the binary expansion of its index. The
//! letter Y acts as the real matrix ZX, matching the phase-free convention
//! of the GF(2) layer; all built-in code fixtures therefore evaluate in real
//! arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex;

use crate::clifford::{CliffordCircuit, CliffordGate};
use crate::error::Error;
use crate::stabilizer::QuantumCode;
use crate::symplectic::{CheckMatrix, PauliString};

/// Complex amplitude type of the state-vector layer.
pub type Amplitude = Complex<f64>;

type C64 = Amplitude;

/// Hard cap on simulated qubits (the two-block logical CNOT check needs 12).
pub const STATEVECTOR_MAX_QUBITS: usize = 14;

/// A normalized pure state on up to [`STATEVECTOR_MAX_QUBITS`] qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<C64>,
}

impl StateVector {
    fn check_width(n: usize) -> Result<(), Error> {
        if n == 0 || n > STATEVECTOR_MAX_QUBITS {
            return Err(Error::Capacity {
                what: "state-vector qubits",
                requested: n,
                limit: STATEVECTOR_MAX_QUBITS,
            });
        }
        Ok(())
    }

    /// The computational basis state with the given index.
    pub fn basis(n: usize, index: usize) -> Result<Self, Error> {
        Self::check_width(n)?;
        if index >= 1 << n {
            return Err(Error::IndexOutOfRange {
                index,
                limit: 1 << n,
            });
        }
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[index] = C64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<C64>) -> Result<Self, Error> {
        Self::check_width(n)?;
        if amps.len() != 1 << n {
            return Err(Error::usage(alloc::format!(
                "expected {} amplitudes, got {}",
                1usize << n,
                amps.len()
            )));
        }
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
    }

    /// Rotate the global phase so the first nonzero amplitude (in basis
    /// order) is positive real.
    pub fn fix_global_phase(&mut self) {
        let Some(a) = self.amps.iter().find(|a| a.norm_sqr() > 1e-24) else {
            return;
        };
        let factor = a.conj() / a.norm();
        for amp in &mut self.amps {
            *amp *= factor;
        }
    }

    /// `<self|other>` with the physics convention (conjugate on the left).
    pub fn inner(&self, other: &StateVector) -> Result<C64, Error> {
        if other.n != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn basis_bit(&self, qubit: usize) -> usize {
        // Column 0 is the most significant bit.
        1usize << (self.n - 1 - qubit)
    }

    /// Apply one gate in place.
    pub fn apply_gate(&mut self, gate: CliffordGate) -> Result<(), Error> {
        gate.validate(self.n)?;
        match gate {
            CliffordGate::H(q) => {
                let bit = self.basis_bit(q);
                let s = core::f64::consts::FRAC_1_SQRT_2;
                for b in 0..self.amps.len() {
                    if b & bit == 0 {
                        let lo = self.amps[b];
                        let hi = self.amps[b | bit];
                        self.amps[b] = (lo + hi) * s;
                        self.amps[b | bit] = (lo - hi) * s;
                    }
                }
            }
            CliffordGate::P(q) => {
                let bit = self.basis_bit(q);
                let i = C64::new(0.0, 1.0);
                for b in 0..self.amps.len() {
                    if b & bit != 0 {
                        self.amps[b] *= i;
                    }
                }
            }
            CliffordGate::Cnot(c, t) => {
                let cbit = self.basis_bit(c);
                let tbit = self.basis_bit(t);
                for b in 0..self.amps.len() {
                    if b & cbit != 0 && b & tbit == 0 {
                        self.amps.swap(b, b | tbit);
                    }
                }
            }
            CliffordGate::Cz(a, bq) => {
                let abit = self.basis_bit(a);
                let bbit = self.basis_bit(bq);
                for b in 0..self.amps.len() {
                    if b & abit != 0 && b & bbit != 0 {
                        self.amps[b] = -self.amps[b];
                    }
                }
            }
            CliffordGate::Swap(a, bq) => {
                let abit = self.basis_bit(a);
                let bbit = self.basis_bit(bq);
                for b in 0..self.amps.len() {
                    if b & abit != 0 && b & bbit == 0 {
                        self.amps.swap(b, (b & !abit) | bbit);
                    }
                }
            }
        }
        Ok(())
    }

    /// Apply a whole circuit in order.
    pub fn apply_circuit(&mut self, circuit: &CliffordCircuit) -> Result<(), Error> {
        if circuit.n() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: circuit.n(),
            });
        }
        for g in circuit.gates() {
            self.apply_gate(*g)?;
        }
        Ok(())
    }

    /// Apply a Pauli string with the Y = ZX real-matrix convention: first the
    /// X part flips bits, then the Z part contributes (-1) per set bit.
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<(), Error> {
        if p.n() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        let mut xmask = 0usize;
        let mut zmask = 0usize;
        for q in 0..self.n {
            if (p.x_bits() >> q) & 1 == 1 {
                xmask |= self.basis_bit(q);
            }
            if (p.z_bits() >> q) & 1 == 1 {
                zmask |= self.basis_bit(q);
            }
        }
        let mut out = vec![C64::new(0.0, 0.0); self.amps.len()];
        for (b, &a) in self.amps.iter().enumerate() {
            let target = b ^ xmask;
            let sign = if (target & zmask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out[target] = a * sign;
        }
        self.amps = out;
        Ok(())
    }

    // (1 + g)/2 where g is the involution form of the Pauli: the real ZX
    // convention makes an odd-Y-count operator square to -1, so those rows
    // are scaled by i to keep a genuine projector. Even-Y-count rows (all
    // built-in generators) are untouched.
    fn projected(&self, p: &PauliString) -> Result<StateVector, Error> {
        let mut flipped = self.clone();
        flipped.apply_pauli(p)?;
        if (p.x_bits() & p.z_bits()).count_ones() % 2 == 1 {
            let i = C64::new(0.0, 1.0);
            for a in &mut flipped.amps {
                *a *= i;
            }
        }
        let amps = self
            .amps
            .iter()
            .zip(&flipped.amps)
            .map(|(a, b)| (a + b) * 0.5)
            .collect();
        Ok(StateVector { n: self.n, amps })
    }
}

fn codeword_basis(
    n: usize,
    constraints: &CheckMatrix,
    expected_rank: usize,
    context: &str,
) -> Result<StateVector, Error> {
    // Commuting, independent constraints guarantee projector rank
    // 2^(n - rows); anything else is a structural defect of the input.
    if let Some((i, j)) = constraints.first_anticommuting_pair() {
        return Err(Error::structure(alloc::format!(
            "{context}: constraint rows {} and {} anticommute",
            i + 1,
            j + 1
        )));
    }
    if constraints.rank() != expected_rank {
        return Err(Error::structure(alloc::format!(
            "{context}: projector rank is 2^{}, expected 2^{}",
            n - constraints.rank(),
            n - expected_rank,
        )));
    }
    for e in 0..1usize << n {
        let mut v = StateVector::basis(n, e)?;
        for g in constraints.iter() {
            v = v.projected(g)?;
        }
        if v.norm_sqr() > 1e-9 {
            v.normalize();
            v.fix_global_phase();
            return Ok(v);
        }
    }
    Err(Error::structure(alloc::format!(
        "{context}: projector annihilates every basis state"
    )))
}

fn codewords_from_generators(
    code: &QuantumCode,
    generators: CheckMatrix,
    k: usize,
) -> Result<Vec<StateVector>, Error> {
    let n = code.n();
    let mut constraints = generators;
    for zbar in code.logical_z().iter().take(k) {
        constraints.push(zbar.clone())?;
    }
    // n - k stabilizer-like rows plus k logical Zs pin a one-dimensional
    // joint +1 eigenspace.
    let zero = codeword_basis(n, &constraints, n, "codewords")?;
    let mut out = Vec::with_capacity(1 << k);
    for b in 0..1usize << k {
        let mut v = zero.clone();
        for (i, xbar) in code.logical_x().iter().take(k).enumerate() {
            if (b >> (k - 1 - i)) & 1 == 1 {
                v.apply_pauli(xbar)?;
            }
        }
        v.fix_global_phase();
        out.push(v);
    }
    Ok(out)
}

/// The logical basis states of a code with no gauge freedom: index `b` holds
/// the codeword for logical bitstring `b` (logical qubit 1 most significant).
/// `|0...0>` is the joint +1 eigenstate of the stabilizer and every logical
/// Z; the rest are obtained by applying logical X operators. Each codeword is
/// normalized with its first nonzero amplitude positive real.
pub fn compute_codewords(code: &QuantumCode) -> Result<Vec<StateVector>, Error> {
    if !code.gauge().is_empty() {
        return Err(Error::structure(
            "code has gauge freedom; fix gauge eigenvalues first",
        ));
    }
    compute_codewords_gauge_fixed(code, &[])
}

/// Like [`compute_codewords`] but with extra commuting constraints (for
/// example one member of each gauge pair, fixed to eigenvalue +1).
pub fn compute_codewords_gauge_fixed(
    code: &QuantumCode,
    fixed: &[PauliString],
) -> Result<Vec<StateVector>, Error> {
    let n = code.n();
    StateVector::check_width(n)?;
    let mut generators = code.stabilizer().clone();
    for f in fixed {
        generators.push(f.clone())?;
    }
    let m = generators.rank();
    if m != generators.len() {
        return Err(Error::structure(
            "stabilizer and fixed gauge rows are not independent",
        ));
    }
    let k = n - m;
    if k != code.k() {
        return Err(Error::structure(alloc::format!(
            "constraints leave 2^{k} codewords but the code declares k = {}",
            code.k()
        )));
    }
    codewords_from_generators(code, generators, k)
}

/// For each error, whether the projected operator is proportional to the
/// identity on the code space: Pi E Pi = lambda Pi within `tol`. This is the
/// projector-level acceptance test equivalent to the anticommute-or-member
/// check, and it is computed entirely on the state-vector side.
pub fn knill_laflamme_verdicts(
    code: &QuantumCode,
    errors: &[PauliString],
    tol: f64,
) -> Result<Vec<bool>, Error> {
    if !code.gauge().is_empty() {
        return Err(Error::structure(
            "projector oracle applies to codes without gauge freedom",
        ));
    }
    let n = code.n();
    StateVector::check_width(n)?;
    let stab = code.stabilizer();
    if let Some((i, j)) = stab.first_anticommuting_pair() {
        return Err(Error::structure(alloc::format!(
            "stabilizer rows {} and {} anticommute",
            i + 1,
            j + 1
        )));
    }
    if !stab.is_independent() {
        return Err(Error::DependentRows);
    }
    let k = n - stab.len();
    let dim = 1usize << k;

    // Orthonormal basis of the code space by projecting and Gram-Schmidt.
    let mut basis: Vec<StateVector> = Vec::with_capacity(dim);
    for e in 0..1usize << n {
        if basis.len() == dim {
            break;
        }
        let mut v = StateVector::basis(n, e)?;
        for g in stab.iter() {
            v = v.projected(g)?;
        }
        for b in &basis {
            let c = b.inner(&v)?;
            for (va, ba) in v.amps.iter_mut().zip(&b.amps) {
                *va -= c * ba;
            }
        }
        if v.norm_sqr() > 1e-9 {
            v.normalize();
            basis.push(v);
        }
    }
    if basis.len() != dim {
        return Err(Error::structure(alloc::format!(
            "projector rank is {}, expected 2^{k}",
            basis.len()
        )));
    }

    let mut verdicts = Vec::with_capacity(errors.len());
    for err in errors {
        if err.n() != n {
            return Err(Error::WidthMismatch {
                expected: n,
                found: err.n(),
            });
        }
        let images: Vec<StateVector> = basis
            .iter()
            .map(|b| {
                let mut v = b.clone();
                v.apply_pauli(err)?;
                Ok(v)
            })
            .collect::<Result<_, Error>>()?;
        let lambda = basis[0].inner(&images[0])?;
        let mut ok = true;
        'outer: for (i, b) in basis.iter().enumerate() {
            for (j, im) in images.iter().enumerate() {
                let m = b.inner(im)?;
                let want = if i == j { lambda } else { C64::new(0.0, 0.0) };
                if (m - want).norm() > tol {
                    ok = false;
                    break 'outer;
                }
            }
        }
        verdicts.push(ok);
    }
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::{builtin_code, BuiltinCode};

    fn close(a: C64, b: C64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn hadamard_makes_plus_state() {
        let mut s = StateVector::basis(1, 0).unwrap();
        s.apply_gate(CliffordGate::H(0)).unwrap();
        let r = core::f64::consts::FRAC_1_SQRT_2;
        assert!(close(s.amplitudes()[0], C64::new(r, 0.0)));
        assert!(close(s.amplitudes()[1], C64::new(r, 0.0)));
    }

    #[test]
    fn cnot_flips_target_when_control_set() {
        let mut s = StateVector::basis(2, 0b10).unwrap();
        s.apply_gate(CliffordGate::Cnot(0, 1)).unwrap();
        assert!(close(s.amplitudes()[0b11], C64::new(1.0, 0.0)));
    }

    #[test]
    fn circuit_then_reverse_is_identity() {
        let gates = alloc::vec![
            CliffordGate::H(0),
            CliffordGate::Cnot(0, 2),
            CliffordGate::Cz(1, 2),
            CliffordGate::Swap(0, 1),
            CliffordGate::H(2),
        ];
        let c = CliffordCircuit::from_gates(3, gates).unwrap();
        let mut s = StateVector::basis(3, 5).unwrap();
        s.apply_gate(CliffordGate::H(1)).unwrap();
        let original = s.clone();
        s.apply_circuit(&c).unwrap();
        s.apply_circuit(&c.reversed()).unwrap();
        for (a, b) in s.amplitudes().iter().zip(original.amplitudes()) {
            assert!(close(*a, *b));
        }
    }

    #[test]
    fn x_flips_and_zx_adds_the_sign() {
        let mut s = StateVector::basis(1, 0).unwrap();
        s.apply_pauli(&"X".parse().unwrap()).unwrap();
        assert!(close(s.amplitudes()[1], C64::new(1.0, 0.0)));

        let mut s = StateVector::basis(1, 0).unwrap();
        s.apply_pauli(&"Y".parse().unwrap()).unwrap();
        assert!(close(s.amplitudes()[1], C64::new(-1.0, 0.0)));
    }

    #[test]
    fn z_type_generator_fixes_all_zeros() {
        let mut s = StateVector::basis(6, 0).unwrap();
        s.apply_pauli(&"IIIZIZ".parse().unwrap()).unwrap();
        assert!(close(s.amplitudes()[0], C64::new(1.0, 0.0)));
    }

    #[test]
    fn trivial_single_qubit_code_has_codeword_zero() {
        use crate::stabilizer::QuantumCode;
        use crate::symplectic::CheckMatrix;
        let stab = CheckMatrix::from_strs(&["Z"]).unwrap();
        let code = QuantumCode::from_parts(stab, None, alloc::vec![], alloc::vec![], &[]).unwrap();
        let words = compute_codewords(&code).unwrap();
        assert_eq!(words.len(), 1);
        assert!(close(words[0].amplitudes()[0], C64::new(1.0, 0.0)));
    }

    #[test]
    fn codewords_are_fixed_by_every_generator() {
        let code = builtin_code(BuiltinCode::SixQubitDegenerate);
        for w in compute_codewords(&code).unwrap() {
            for g in code.stabilizer().iter() {
                let mut v = w.clone();
                v.apply_pauli(g).unwrap();
                for (a, b) in v.amplitudes().iter().zip(w.amplitudes()) {
                    assert!(close(*a, *b));
                }
            }
        }
    }
}
