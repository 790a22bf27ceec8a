//! A branching state copies the system's pointer basis into every ancilla,
//! so any single ancilla already holds all of `H_S` and the profile is flat.
//!
//! ```text
//! cargo run --example branching_plateau
//! ```

use num_complex::Complex64 as C64;
use qdscram::infometrics::{averaged_mi_profile, averaged_tmi, classify_profile, ClassifyThresholds};
use qdscram::model::{branching_state_computational, RegisterLayout};

fn main() -> qdscram::Result<()> {
    let n = 6;
    let alphas = [C64::new(0.3f64.sqrt(), 0.0), C64::new(0.7f64.sqrt(), 0.0)];
    let state = branching_state_computational(&alphas, n)?;
    let layout = RegisterLayout::new(1, n)?;

    let profile = averaged_mi_profile(&state, &layout, 1000, 0)?;
    println!("H_S = {:.4} bits", profile.system_entropy);
    for e in &profile.entries {
        println!("  fN = {}  I = {:.4} bits  ({} fragments)", e.size, e.mean_bits, e.n_samples);
    }
    println!("class: {}", classify_profile(&profile, &ClassifyThresholds::default())?);
    for l in 1..=n - 2 {
        println!("averaged I3 with |C| = {l}: {:.4} bits", averaged_tmi(&state, &layout, l, 1000, 0)?.mean);
    }
    Ok(())
}
