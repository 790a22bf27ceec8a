use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qdscram::experiment::{
    exit_code, preset_specs, resolve_out_dir, run_sweep, write_results, ExperimentSpec, PRESETS,
};
use qdscram::infometrics::ClassifyThresholds;
use qdscram::{Error, Result};

/// Collision-model sweeps of quantum Darwinism and scrambling measures.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Sampling seed; required for presets, overrides the config file's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output directory (else $QDSCRAM_OUT_DIR, the config's out_dir, or ./out).
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Fragments averaged per size.
    #[arg(long, global = true)]
    budget_fragments: Option<usize>,

    /// Partitions averaged per TMI point.
    #[arg(long, global = true)]
    budget_partitions: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named figure preset.
    Run { preset: String },
    /// Run a sweep described by a flat JSON file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// List the available presets.
    ListPresets,
}

impl Cli {
    fn apply_overrides(&self, spec: &mut ExperimentSpec) {
        if let Some(seed) = self.seed {
            spec.seed = seed;
        }
        if let Some(b) = self.budget_fragments {
            spec.fragment_budget = b;
        }
        if let Some(b) = self.budget_partitions {
            spec.partition_budget = b;
        }
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let (invocation, mut specs) = match &cli.command {
        Command::ListPresets => {
            for p in PRESETS {
                println!("{:<6} {}", p.name, p.description);
            }
            return Ok(());
        }
        Command::Run { preset } => {
            let seed = cli
                .seed
                .ok_or_else(|| Error::InvalidSpec("--seed is required when running a preset".into()))?;
            (preset.clone(), preset_specs(preset, seed)?)
        }
        Command::Sweep { config } => ("sweep".to_string(), vec![ExperimentSpec::from_file(config)?]),
    };
    for spec in &mut specs {
        cli.apply_overrides(spec);
        spec.validate()?;
    }
    let out_dir = resolve_out_dir(cli.out_dir.as_deref(), specs[0].out_dir.as_deref());

    let thresholds = ClassifyThresholds::default();
    let mut results = Vec::new();
    for spec in &specs {
        let result = run_sweep(spec, cli.threads)?;
        let series = result.tmi_series();
        let classes = result.classes(&thresholds);
        let count = |name: &str| classes.iter().flatten().filter(|c| c.to_string() == name).count();
        println!(
            "{}: {} points, I3 in [{:.4}, {:.4}] bits, plateau/independent/encoding = {}/{}/{}",
            spec.label(),
            result.points.len(),
            series.min().map_or(f64::NAN, |p| p.mean_bits),
            series.max().map_or(f64::NAN, |p| p.mean_bits),
            count("plateau"),
            count("independent"),
            count("encoding"),
        );
        results.push(result);
    }
    let manifest = write_results(&out_dir, &invocation, cli.threads, &results)?;
    println!("wrote {} files to {}", manifest.files.len() + 1, out_dir.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
