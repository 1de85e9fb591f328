//! Stabilizer quantum error-correction toolkit.
//!
//! `stabkit` implements the binary symplectic machinery behind small
//! stabilizer codes and builds on it in layers:
//!
//! - [`symplectic`]: phase-free Pauli strings, GF(2) matrices, and generator
//!   sets with span/membership queries.
//! - [`stabilizer`]: quantum code objects (including entanglement-assisted
//!   and subsystem codes), error-correction verification, brute-force
//!   distance, and the built-in six- and seven-qubit fixtures.
//! - [`clifford`]: column-update conjugation rules for H/P/CNOT/CZ/SWAP,
//!   circuit replay on check matrices, and a small state-vector layer used
//!   as a sign-exact oracle (codewords, Knill-Laflamme checks).
//! - [`synthesis`]: symplectic Gram-Schmidt pairing and encoder-circuit
//!   synthesis by reduction to the canonical unencoded form.
//! - [`cssea`]: CSS constructions from classical parity-check matrices,
//!   ebit-assisted extension of non-commuting generator sets, and the
//!   generator-level equivalence transform onto the Steane code.
//! - [`search`]: exhaustive enumeration of CSS stabilizers in canonical
//!   subspace form, used to verify non-existence results by machine.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `stabkit-cli` crate.
//!
//! Qubit and row indices are 0-based throughout the API. Text formats and
//! human-readable reports use 1-based labels.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod clifford;
pub mod cssea;
pub mod error;
pub mod search;
pub mod stabilizer;
pub mod symplectic;
pub mod synthesis;
pub mod tables;

pub use error::Error;
pub use symplectic::{BitMatrix, CheckMatrix, Pauli, PauliString};
