//! Phase-free Pauli algebra and GF(2) linear algebra.
//!
//! Everything here works "up to global phase": a Pauli operator is a pair of
//! bit vectors (X part, Z part), commutation is the symplectic inner product,
//! and group statements (membership, span equality) are answered by GF(2)
//! row reduction of the binary Z|X form.

mod bitmatrix;
mod check;
mod pauli;

pub use bitmatrix::{BitMatrix, Rref};
pub use check::CheckMatrix;
pub use pauli::{Pauli, PauliString, MAX_QUBITS};
