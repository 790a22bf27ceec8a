use serde::{Deserialize, Serialize};

use super::hamiltonian::{collision_unitary, free_qubit_propagator, CouplingSpec, SystemCoupling};
use super::layout::RegisterLayout;
use super::states::{initial_state, InitialStatePreset};
use crate::error::{Error, Result};
use crate::qcore::{ComplexMatrix, StateVector};

/// Everything needed to run one collision sequence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CollisionConfig {
    pub layout: RegisterLayout,
    pub couplings: CouplingSpec,
    /// Duration `t` of each individual collision.
    pub duration: f64,
    pub initial_state: InitialStatePreset,
    #[serde(default)]
    pub coupled_system_qubit: SystemCoupling,
    /// Let idle ancillas pick up their free phase `exp(-i σz t/2)` during
    /// other ancillas' collisions. Off by default: idle ancillas are frozen.
    #[serde(default)]
    pub idle_ancilla_phases: bool,
}

impl CollisionConfig {
    /// Preset couplings with `J = ε = 1` and both system qubits coupled.
    pub fn preset(preset: InitialStatePreset, num_ancillas: usize, duration: f64) -> Result<Self> {
        Ok(Self {
            layout: RegisterLayout::new(preset.system_size(), num_ancillas)?,
            couplings: preset.couplings(1.0, 1.0),
            duration,
            initial_state: preset,
            coupled_system_qubit: SystemCoupling::Both,
            idle_ancilla_phases: false,
        })
    }

    pub fn with_duration(&self, duration: f64) -> Self {
        Self {
            duration,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.duration >= 0.0 && self.duration.is_finite()) {
            return Err(Error::invalid(format!(
                "collision duration must be finite and >= 0, got {}",
                self.duration
            )));
        }
        if self.initial_state.system_size() != self.layout.system_size() {
            return Err(Error::invalid("initial state preset does not match the layout"));
        }
        Ok(())
    }

    pub fn collision_unitary(&self) -> Result<ComplexMatrix> {
        collision_unitary(
            &self.layout,
            &self.couplings,
            self.coupled_system_qubit,
            self.duration,
        )
    }
}

/// Runs the `N` collisions `U_{S,E_N} ⋯ U_{S,E_1}` on the preset initial state.
pub fn run_collisions(config: &CollisionConfig) -> Result<StateVector> {
    config.validate()?;
    let state = initial_state(config.initial_state, &config.layout)?;
    evolve(config, state)
}

/// Runs the collision sequence on an arbitrary starting state.
pub fn evolve(config: &CollisionConfig, mut state: StateVector) -> Result<StateVector> {
    config.validate()?;
    let layout = &config.layout;
    if state.num_qubits() != layout.total_qubits() {
        return Err(Error::DimensionMismatch {
            expected: layout.total_qubits(),
            actual: state.num_qubits(),
        });
    }
    let u = config.collision_unitary()?;
    let idle = config
        .idle_ancilla_phases
        .then(|| free_qubit_propagator(config.duration));
    let mut targets = layout.system_qubits();
    targets.push(0);
    let last = targets.len() - 1;
    for k in 1..=layout.num_ancillas() {
        targets[last] = layout.ancilla(k);
        state.apply_local_unitary_in_place(&u, &targets)?;
        if let Some(phase) = &idle {
            for other in (1..=layout.num_ancillas()).filter(|&o| o != k) {
                state.apply_local_unitary_in_place(phase, &[layout.ancilla(other)])?;
            }
        }
    }
    Ok(state)
}
