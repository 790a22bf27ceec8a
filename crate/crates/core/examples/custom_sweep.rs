//! Describe a sweep as JSON, run it and write the CSVs plus manifest, the
//! same way `qdscram sweep --config` does.
//!
//! ```text
//! cargo run --example custom_sweep [OUT_DIR]
//! ```

use std::path::PathBuf;

use qdscram::experiment::{run_sweep, write_results, ExperimentSpec};

fn main() -> qdscram::Result<()> {
    let out: PathBuf = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("qdscram-demo"), PathBuf::from);
    let spec = ExperimentSpec::from_json_str(
        r#"{
            "label": "demo",
            "system_size": 2,
            "num_ancillas": 4,
            "interaction": "exchange",
            "t_values": [0.1, 0.4, 0.8],
            "fragment_budget": 100,
            "seed": 7
        }"#,
    )?;
    let result = run_sweep(&spec, 0)?;
    let manifest = write_results(&out, "sweep", 0, &[result])?;
    for f in &manifest.files {
        println!("{}  {}", &f.sha256[..12], out.join(&f.path).display());
    }
    Ok(())
}
