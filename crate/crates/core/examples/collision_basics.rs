//! Build a collision unitary by hand, run the collisions one at a time and
//! watch the system entropy and its correlation with each ancilla.
//!
//! ```text
//! cargo run --example collision_basics
//! ```

use qdscram::infometrics::mutual_information;
use qdscram::model::{initial_state, CollisionConfig, InitialStatePreset};

fn main() -> qdscram::Result<()> {
    let config = CollisionConfig::preset(InitialStatePreset::DephasingSingle, 4, 0.8)?;
    let layout = config.layout;
    let u = config.collision_unitary()?;
    println!("collision unitary: {0}x{0}, unitarity error {1:.1e}", u.rows(), u.unitarity_error());

    let mut state = initial_state(config.initial_state, &layout)?;
    let sys = layout.system_qubits();
    for k in 0..=layout.num_ancillas() {
        if k > 0 {
            let mut targets = sys.clone();
            targets.push(layout.ancilla(k));
            state.apply_local_unitary_in_place(&u, &targets)?;
        }
        let per_ancilla: Vec<String> = (1..=layout.num_ancillas())
            .map(|a| mutual_information(&state, &sys, &[layout.ancilla(a)]).map(|i| format!("{i:.3}")))
            .collect::<qdscram::Result<_>>()?;
        println!(
            "after {k} collisions: H_S = {:.4} bits, I(S:E_a) = [{}]",
            state.subsystem_entropy(&sys)?,
            per_ancilla.join(", ")
        );
    }
    Ok(())
}
