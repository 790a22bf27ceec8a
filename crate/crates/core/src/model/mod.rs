//! The collision model: a one- or two-qubit system `S` meets the ancillas
//! `E_1 … E_N` one at a time, each meeting lasting `t`.
//!
//! The first collision is with `E_1`, the ancilla that already shares the
//! system's entanglement in the initial state. Ancillas not currently
//! colliding are left untouched unless
//! [`CollisionConfig::idle_ancilla_phases`] is set.

mod evolution;
mod hamiltonian;
mod layout;
mod states;

pub use evolution::{evolve, run_collisions, CollisionConfig};
pub use hamiltonian::{
    collision_generator, collision_unitary, free_qubit_propagator, interaction_hamiltonian,
    system_hamiltonian, CouplingSpec, SystemCoupling,
};
pub use layout::{RegisterLayout, Role, MAX_QUBITS};
pub use states::{
    branching_state, branching_state_computational, dicke_state, initial_state,
    scrambled_example_state, InitialStatePreset,
};

#[cfg(test)]
pub(crate) use states::binomial;
