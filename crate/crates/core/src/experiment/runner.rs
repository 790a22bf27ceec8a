use std::time::Instant;

use rayon::prelude::*;

use super::spec::{ExperimentSpec, StateSource};
use crate::error::{Error, Result};
use crate::infometrics::{
    averaged_mi_profile_with, averaged_tmi_with, classify_profile, ClassifyThresholds, MIProfile, ProfileClass,
    ProfileOptions, TMISeries, TmiAverage, TmiOptions, TmiPoint,
};
use crate::model::{run_collisions, scrambled_example_state};
use crate::qcore::StateVector;

/// Everything measured at one grid point.
#[derive(Clone, Debug)]
pub struct PointResult {
    pub index: usize,
    pub t: f64,
    pub profile: MIProfile,
    pub tmi: TmiAverage,
    pub seconds: f64,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub spec: ExperimentSpec,
    pub points: Vec<PointResult>,
}

impl SweepResult {
    pub fn tmi_series(&self) -> TMISeries {
        TMISeries {
            l: self.spec.l,
            seed: self.spec.seed,
            entries: self
                .points
                .iter()
                .map(|p| TmiPoint {
                    t: p.t,
                    mean_bits: p.tmi.mean,
                    n_partitions: p.tmi.n_partitions,
                    enumerated: p.tmi.enumerated,
                })
                .collect(),
        }
    }

    /// Profile class per point; `None` where the system entropy vanishes.
    pub fn classes(&self, thresholds: &ClassifyThresholds) -> Vec<Option<ProfileClass>> {
        self.points
            .iter()
            .map(|p| classify_profile(&p.profile, thresholds).ok())
            .collect()
    }

    pub fn point_at(&self, t: f64) -> Option<&PointResult> {
        self.points.iter().find(|p| (p.t - t).abs() < 1e-12)
    }
}

/// The global state a sweep analyses at grid point `t`.
pub fn sweep_state(spec: &ExperimentSpec, t: f64) -> Result<StateVector> {
    match spec.source {
        StateSource::Collision => run_collisions(&spec.collision_config(t)?),
        StateSource::ScrambledExample => scrambled_example_state(spec.num_ancillas),
    }
}

fn evaluate_point(spec: &ExperimentSpec, index: usize, t: f64) -> Result<PointResult> {
    let start = Instant::now();
    let layout = spec.layout()?;
    let state = sweep_state(spec, t)?;
    let profile = averaged_mi_profile_with(
        &state,
        &layout,
        &ProfileOptions {
            budget: spec.fragment_budget,
            seed: spec.seed,
            max_fragment_size: spec.max_fragment_size,
            point: index as u64,
        },
    )?;
    let tmi = averaged_tmi_with(
        &state,
        &layout,
        &TmiOptions {
            l: spec.l,
            budget: spec.partition_budget,
            seed: spec.seed,
            scope: spec.partition_scope,
            point: index as u64,
        },
    )?;
    Ok(PointResult {
        index,
        t,
        profile,
        tmi,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs all grid points of one sweep on `threads` workers (0 picks the
/// machine default). Results come back in grid order and do not depend on
/// the worker count.
pub fn run_sweep(spec: &ExperimentSpec, threads: usize) -> Result<SweepResult> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
    let grid = spec.t_grid();
    let points = pool.install(|| {
        grid.par_iter()
            .enumerate()
            .map(|(i, &t)| evaluate_point(spec, i, t))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SweepResult {
        spec: spec.clone(),
        points,
    })
}
