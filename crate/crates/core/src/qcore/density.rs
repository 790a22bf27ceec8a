//! Density matrices and von Neumann entropy.

use num_complex::Complex64 as C64;

use super::eig::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use super::state::check_qubits;
use crate::error::{Error, Result};

pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues in `[-POSITIVITY_TOL, 0)` are clamped to zero; anything more
/// negative is reported as broken positivity.
pub const POSITIVITY_TOL: f64 = 1e-10;
/// Eigenvalues below this contribute nothing to the entropy.
pub const ENTROPY_CUTOFF: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn from_matrix(num_qubits: usize, matrix: ComplexMatrix) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: matrix.rows(),
            });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::invalid(format!("density matrix trace {trace}")));
        }
        let vals = hermitian_eigenvalues(&matrix)?;
        if let Some(&min) = vals.first() {
            if min < -POSITIVITY_TOL {
                return Err(Error::NegativeEigenvalue(min));
            }
        }
        Ok(Self { num_qubits, matrix })
    }

    pub(crate) fn from_matrix_unchecked(num_qubits: usize, matrix: ComplexMatrix) -> Self {
        Self { num_qubits, matrix }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// `ρ ⊗ σ`.
    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            num_qubits: self.num_qubits + other.num_qubits,
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    /// Reduced state on `keep` (indices into this register, result in
    /// ascending qubit order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        let n = self.num_qubits;
        check_qubits(keep, n)?;
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        let rest: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
        let dk = 1usize << kept.len();
        let dr = 1usize << rest.len();
        let compose = |a: usize, b: usize| -> usize {
            let mut idx = 0;
            for (j, &q) in kept.iter().enumerate() {
                idx |= ((a >> (kept.len() - 1 - j)) & 1) << (n - 1 - q);
            }
            for (j, &q) in rest.iter().enumerate() {
                idx |= ((b >> (rest.len() - 1 - j)) & 1) << (n - 1 - q);
            }
            idx
        };
        let mut out = ComplexMatrix::zeros(dk, dk);
        for i in 0..dk {
            for j in 0..dk {
                out[(i, j)] = (0..dr)
                    .map(|e| self.matrix[(compose(i, e), compose(j, e))])
                    .sum();
            }
        }
        Ok(Self::from_matrix_unchecked(kept.len(), out))
    }

    /// Von Neumann entropy in bits.
    pub fn vn_entropy(&self) -> Result<f64> {
        entropy_of_hermitian(&self.matrix)
    }
}

/// `-Σ λ log2 λ` over the spectrum of a positive semidefinite matrix.
pub(crate) fn entropy_of_hermitian(m: &ComplexMatrix) -> Result<f64> {
    let vals = hermitian_eigenvalues(m)?;
    entropy_of_spectrum(&vals)
}

pub fn entropy_of_spectrum(vals: &[f64]) -> Result<f64> {
    let mut h = 0.0;
    for &l in vals {
        if l < -POSITIVITY_TOL {
            return Err(Error::NegativeEigenvalue(l));
        }
        if l > ENTROPY_CUTOFF {
            h -= l * l.log2();
        }
    }
    Ok(h.max(0.0))
}
