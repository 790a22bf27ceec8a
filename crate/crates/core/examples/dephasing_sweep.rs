//! Pure dephasing with a single-qubit system: sweep the collision time and
//! compare the averaged tripartite information with the profile class.
//!
//! ```text
//! cargo run --release --example dephasing_sweep [N]
//! ```

use qdscram::experiment::{run_sweep, ExperimentSpec, Interaction};
use qdscram::infometrics::ClassifyThresholds;

fn main() -> qdscram::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let mut spec = ExperimentSpec::new(1, n, Interaction::Dephasing, 1);
    spec.t_points = 30;
    let result = run_sweep(&spec, 0)?;
    let classes = result.classes(&ClassifyThresholds::default());
    println!("{:>6} {:>9} {:>9}  class", "t", "I3", "I(1)/H_S");
    for (p, class) in result.points.iter().zip(classes) {
        println!(
            "{:>6.2} {:>9.4} {:>9.4}  {}",
            p.t,
            p.tmi.mean,
            p.profile.normalized(1).unwrap_or(f64::NAN),
            class.map_or("-".to_string(), |c| c.to_string()),
        );
    }
    Ok(())
}
