//! Exchange coupling with a two-qubit system: find the collision times where
//! the averaged tripartite information turns negative and show the profiles
//! there.
//!
//! ```text
//! cargo run --release --example exchange_scrambling
//! ```

use qdscram::experiment::{run_sweep, ExperimentSpec, Interaction};
use qdscram::infometrics::ClassifyThresholds;

fn main() -> qdscram::Result<()> {
    let spec = ExperimentSpec::new(2, 5, Interaction::Exchange, 1);
    let result = run_sweep(&spec, 0)?;
    let classes = result.classes(&ClassifyThresholds::default());
    for (p, class) in result.points.iter().zip(classes) {
        if p.tmi.mean >= 0.0 {
            continue;
        }
        let profile: Vec<String> = (0..=5)
            .map(|k| format!("{:.3}", p.profile.normalized(k).unwrap_or(f64::NAN)))
            .collect();
        println!(
            "t = {:.2}: I3 = {:+.4} bits, I/H_S = [{}], {}",
            p.t,
            p.tmi.mean,
            profile.join(", "),
            class.map_or("-".to_string(), |c| c.to_string())
        );
    }
    Ok(())
}
