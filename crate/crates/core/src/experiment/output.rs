use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::runner::{PointResult, SweepResult};
use super::spec::ExperimentSpec;
use crate::error::{Error, Result};

pub const PROFILE_HEADER: [&str; 7] = ["t", "fN", "f", "I_avg_bits", "I_over_HS", "n_samples", "enumerated"];
pub const TMI_HEADER: [&str; 4] = ["t", "I3_avg_bits", "n_partitions", "enumerated"];

pub const MANIFEST_FILE: &str = "manifest.json";

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().map_err(|e| Error::invalid(format!("csv buffer: {e}")))
}

fn profile_rows(point: &PointResult) -> impl Iterator<Item = Vec<String>> + '_ {
    let n = point.profile.num_ancillas as f64;
    point.profile.entries.iter().map(move |e| {
        let normalized = point.profile.normalized(e.size).unwrap_or(f64::NAN);
        vec![
            point.t.to_string(),
            e.size.to_string(),
            (e.size as f64 / n).to_string(),
            e.mean_bits.to_string(),
            normalized.to_string(),
            e.n_samples.to_string(),
            e.enumerated.to_string(),
        ]
    })
}

/// Profile CSV for the given points, one row per `(t, fN)`.
pub fn profile_csv(points: &[PointResult]) -> Result<Vec<u8>> {
    csv_bytes(&PROFILE_HEADER, points.iter().flat_map(profile_rows))
}

/// TMI series CSV, one row per grid point.
pub fn tmi_csv(points: &[PointResult]) -> Result<Vec<u8>> {
    csv_bytes(
        &TMI_HEADER,
        points.iter().map(|p| {
            vec![
                p.t.to_string(),
                p.tmi.mean.to_string(),
                p.tmi.n_partitions.to_string(),
                p.tmi.enumerated.to_string(),
            ]
        }),
    )
}

/// Writes via a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FileDigest {
    /// Relative to the output directory, `/`-separated.
    pub path: String,
    pub sha256: String,
    pub bytes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointTiming {
    pub index: usize,
    pub t: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub label: String,
    pub spec: ExperimentSpec,
    pub points: Vec<PointTiming>,
}

/// Written next to the CSVs of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub created: String,
    /// Preset name, or `sweep`.
    pub invocation: String,
    pub threads: usize,
    pub runs: Vec<RunRecord>,
    pub files: Vec<FileDigest>,
}

impl RunManifest {
    pub fn read(dir: &Path) -> Result<Self> {
        let path = dir.join(MANIFEST_FILE);
        let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Paths whose current contents no longer match the recorded digest.
    pub fn mismatched_files(&self, dir: &Path) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for f in &self.files {
            let path = dir.join(&f.path);
            let bytes = fs::read(&path).map_err(|e| Error::io(&path, e))?;
            if sha256_hex(&bytes) != f.sha256 {
                bad.push(f.path.clone());
            }
        }
        Ok(bad)
    }
}

/// The files of one sweep: `heatmap.csv` with every point, one
/// `profile_tNNN.csv` per grid point and `tmi.csv`, under `<label>/`.
pub fn sweep_files(result: &SweepResult) -> Result<Vec<(String, Vec<u8>)>> {
    let label = result.spec.label();
    let mut files = vec![(format!("{label}/heatmap.csv"), profile_csv(&result.points)?)];
    for p in &result.points {
        files.push((
            format!("{label}/profile_t{:03}.csv", p.index),
            profile_csv(std::slice::from_ref(p))?,
        ));
    }
    files.push((format!("{label}/tmi.csv"), tmi_csv(&result.points)?));
    Ok(files)
}

/// Writes every sweep's CSVs and then the manifest into `dir`.
pub fn write_results(dir: &Path, invocation: &str, threads: usize, results: &[SweepResult]) -> Result<RunManifest> {
    let mut files = Vec::new();
    let mut runs = Vec::new();
    for result in results {
        for (rel, bytes) in sweep_files(result)? {
            write_atomic(&dir.join(&rel), &bytes)?;
            files.push(FileDigest {
                path: rel,
                sha256: sha256_hex(&bytes),
                bytes: bytes.len(),
            });
        }
        runs.push(RunRecord {
            label: result.spec.label(),
            spec: result.spec.clone(),
            points: result
                .points
                .iter()
                .map(|p| PointTiming {
                    index: p.index,
                    t: p.t,
                    seconds: p.seconds,
                })
                .collect(),
        });
    }
    let manifest = RunManifest {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        created: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        invocation: invocation.to_string(),
        threads,
        runs,
        files,
    };
    write_atomic(&dir.join(MANIFEST_FILE), &serde_json::to_vec_pretty(&manifest)?)?;
    Ok(manifest)
}

pub const OUT_DIR_ENV: &str = "QDSCRAM_OUT_DIR";

/// Command line first, then the environment, then the config's `out_dir`, then `out`.
pub fn resolve_out_dir(cli: Option<&Path>, spec: Option<&Path>) -> PathBuf {
    cli.map(Path::to_path_buf)
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .or_else(|| spec.map(Path::to_path_buf))
        .unwrap_or_else(|| PathBuf::from("out"))
}
