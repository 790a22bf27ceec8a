//! Hamiltonians of the system, the system–ancilla coupling and the collision
//! generator. `ħ = 1`; every qubit carries the free term `σz / 2`.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::layout::RegisterLayout;
use crate::error::Result;
use crate::qcore::{expm_minus_i_h_t, kron_all, pauli_x, pauli_y, pauli_z, ComplexMatrix};

/// Heisenberg couplings `J_x, J_y, J_z` between system and ancilla, and the
/// intra-system exchange strength `ε` (used only for a two-qubit system).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CouplingSpec {
    pub j_x: f64,
    pub j_y: f64,
    pub j_z: f64,
    pub epsilon: f64,
}

impl CouplingSpec {
    /// `J_x = J_y = 0`, `J_z = J`.
    pub fn dephasing(j: f64, epsilon: f64) -> Self {
        Self {
            j_x: 0.0,
            j_y: 0.0,
            j_z: j,
            epsilon,
        }
    }

    /// `J_x = J_y = J`, `J_z = 0`.
    pub fn exchange(j: f64, epsilon: f64) -> Self {
        Self {
            j_x: j,
            j_y: j,
            j_z: 0.0,
            epsilon,
        }
    }

    pub fn free() -> Self {
        Self {
            j_x: 0.0,
            j_y: 0.0,
            j_z: 0.0,
            epsilon: 0.0,
        }
    }

    fn terms(&self) -> [(f64, ComplexMatrix); 3] {
        [
            (self.j_x, pauli_x()),
            (self.j_y, pauli_y()),
            (self.j_z, pauli_z()),
        ]
    }
}

/// Which system qubits take part in each system–ancilla collision (only
/// meaningful for a two-qubit system).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemCoupling {
    /// Only `S_1` couples; `S_2` feels the environment through `ε`.
    First,
    /// Both system qubits couple to the colliding ancilla with the same `J_j`.
    #[default]
    Both,
}

fn free_qubit() -> ComplexMatrix {
    &pauli_z() * 0.5
}

fn xx_plus_yy() -> ComplexMatrix {
    &pauli_x().kron(&pauli_x()) + &pauli_y().kron(&pauli_y())
}

/// `σz/2` for one qubit; `σz/2 ⊗ I + I ⊗ σz/2 + ε(σx⊗σx + σy⊗σy)` for two.
pub fn system_hamiltonian(layout: &RegisterLayout, couplings: &CouplingSpec) -> Result<ComplexMatrix> {
    let id = ComplexMatrix::identity(2);
    Ok(match layout.system_size() {
        1 => free_qubit(),
        _ => {
            let free = &free_qubit().kron(&id) + &id.kron(&free_qubit());
            &free + &(&xx_plus_yy() * couplings.epsilon)
        }
    })
}

/// `Σ_j J_j σ^j ⊗ σ^j` on (system qubit, ancilla).
pub fn interaction_hamiltonian(couplings: &CouplingSpec) -> ComplexMatrix {
    couplings
        .terms()
        .iter()
        .fold(ComplexMatrix::zeros(4, 4), |acc, (j, p)| &acc + &(&p.kron(p) * *j))
}

/// Generator of one collision on `(system qubits…, ancilla)`:
/// `H_S + H_E + H_{S,E}`.
pub fn collision_generator(
    layout: &RegisterLayout,
    couplings: &CouplingSpec,
    coupling: SystemCoupling,
) -> Result<ComplexMatrix> {
    let id = ComplexMatrix::identity(2);
    let h_s = system_hamiltonian(layout, couplings)?;
    let h0 = &h_s.kron(&id) + &ComplexMatrix::identity(h_s.rows()).kron(&free_qubit());
    let h_int = match (layout.system_size(), coupling) {
        (1, _) => interaction_hamiltonian(couplings),
        (_, SystemCoupling::First) => couplings.terms().iter().fold(
            ComplexMatrix::zeros(8, 8),
            |acc, (j, p)| &acc + &(&kron_all(&[p, &id, p]) * *j),
        ),
        (_, SystemCoupling::Both) => couplings.terms().iter().fold(
            ComplexMatrix::zeros(8, 8),
            |acc, (j, p)| {
                let pair = &kron_all(&[p, &id, p]) + &kron_all(&[&id, p, p]);
                &acc + &(&pair * *j)
            },
        ),
    };
    Ok(&h0 + &h_int)
}

/// `exp[-i (H_0 + H_{S,E_k}) t]`.
pub fn collision_unitary(
    layout: &RegisterLayout,
    couplings: &CouplingSpec,
    coupling: SystemCoupling,
    duration: f64,
) -> Result<ComplexMatrix> {
    expm_minus_i_h_t(&collision_generator(layout, couplings, coupling)?, duration)
}

/// Free evolution `exp(-i σz t / 2)` of a single idle qubit.
pub fn free_qubit_propagator(duration: f64) -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&[
        C64::from_polar(1.0, -0.5 * duration),
        C64::from_polar(1.0, 0.5 * duration),
    ])
}
