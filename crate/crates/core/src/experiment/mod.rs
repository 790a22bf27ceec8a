//! Sweeps over the collision duration, figure presets and their on-disk
//! output.
//!
//! Each sweep writes, under `<out_dir>/<label>/`, a `heatmap.csv` with the
//! averaged profile at every grid point, one `profile_tNNN.csv` per point and
//! a `tmi.csv` series. A `manifest.json` with the resolved specs, timings and
//! SHA-256 digests of every file is written last. CSV contents depend only on
//! the [`ExperimentSpec`] and its seed.

mod output;
mod presets;
mod runner;
mod spec;

pub use output::{
    profile_csv, resolve_out_dir, sha256_hex, sweep_files, tmi_csv, write_atomic, write_results, FileDigest,
    PointTiming, RunManifest, RunRecord, MANIFEST_FILE, OUT_DIR_ENV, PROFILE_HEADER, TMI_HEADER,
};
pub use presets::{preset_specs, PresetInfo, PRESETS};
pub use runner::{run_sweep, sweep_state, PointResult, SweepResult};
pub use spec::{ExperimentSpec, Interaction, StateSource};

use crate::error::Error;

/// Process exit status for a failed run: 2 for a bad spec, 3 when a size cap
/// is exceeded, 4 for I/O trouble and 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidSpec(_) | Error::InvalidArgument(_) | Error::Json(_) => 2,
        Error::CapExceeded { .. } => 3,
        Error::Io { .. } | Error::Csv(_) => 4,
        _ => 1,
    }
}
