//! The Dicke-type scrambled example: profile, redundancy and the tripartite
//! information for a few environment sizes.
//!
//! ```text
//! cargo run --example scrambled_example
//! ```

use qdscram::infometrics::{
    averaged_mi_profile, averaged_tmi, classify_profile, redundancy_fraction, ClassifyThresholds, Redundancy,
};
use qdscram::model::{scrambled_example_state, RegisterLayout};

fn main() -> qdscram::Result<()> {
    for n in [5, 6, 7] {
        let state = scrambled_example_state(n)?;
        let layout = RegisterLayout::new(1, n)?;
        let profile = averaged_mi_profile(&state, &layout, 1000, 0)?;
        let normalized: Vec<String> = (0..=n)
            .map(|k| format!("{:.3}", profile.normalized(k).unwrap_or(f64::NAN)))
            .collect();
        let redundancy = match redundancy_fraction(&profile, 0.1)? {
            Redundancy::Fraction { fraction, .. } => format!("f_0.1 = {fraction:.3}"),
            Redundancy::NoRedundancy => "no redundancy".to_string(),
        };
        println!(
            "N = {n}: I/H_S = [{}], {redundancy}, class {}, averaged I3 = {:+.4} bits",
            normalized.join(", "),
            classify_profile(&profile, &ClassifyThresholds::default())?,
            averaged_tmi(&state, &layout, 2, 1000, 0)?.mean,
        );
    }
    Ok(())
}
