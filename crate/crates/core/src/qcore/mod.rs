//! Dense complex linear algebra for small qubit registers: tensor products,
//! local unitaries, partial traces, Hermitian eigendecomposition, matrix
//! exponentials and von Neumann entropy.
//!
//! Everything here is dense. At the register sizes this crate targets
//! (≤ 14 qubits) a state holds at most 16384 amplitudes and the reduced
//! matrices fed to the eigensolver stay at or below 128×128.

pub mod density;
pub mod eig;
pub mod matrix;
pub mod state;

pub use density::{entropy_of_spectrum, DensityMatrix};
pub use eig::{expm_minus_i_h_t, hermitian_eig, hermitian_eigenvalues, EigenDecomposition};
pub use matrix::{kron_all, pauli_x, pauli_y, pauli_z, ComplexMatrix};
pub use state::StateVector;

/// Tensor product of two pure states.
pub fn tensor(a: &StateVector, b: &StateVector) -> StateVector {
    a.tensor(b)
}

/// Von Neumann entropy of a density matrix, in bits.
pub fn vn_entropy(rho: &DensityMatrix) -> crate::Result<f64> {
    rho.vn_entropy()
}
