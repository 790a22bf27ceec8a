//! Named bundles of sweeps, one per figure. All use `ε = J = 1`,
//! `l = 2` and 1000-sample budgets.

use super::spec::{ExperimentSpec, Interaction, StateSource};
use crate::error::{Error, Result};

pub struct PresetInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo {
        name: "fig2",
        description: "scrambled Dicke example, profiles for N = 5, 6, 7",
    },
    PresetInfo {
        name: "fig4",
        description: "dephasing, single-qubit system, N = 5 and 6: profile heatmap and TMI series",
    },
    PresetInfo {
        name: "fig5",
        description: "dephasing, single-qubit system, N = 6: profiles along the t grid",
    },
    PresetInfo {
        name: "fig6",
        description: "dephasing, two-qubit system, N = 4 and 5: profile heatmap and TMI series",
    },
    PresetInfo {
        name: "fig7",
        description: "dephasing, both system sizes, N = 10 and 12 at t = 0.05, 0.8, 1.2 (fN <= N/2)",
    },
    PresetInfo {
        name: "fig8",
        description: "exchange, single-qubit system, N = 5 and 6: profile heatmap and TMI series",
    },
    PresetInfo {
        name: "fig9",
        description: "exchange, two-qubit system, N = 5 and 6: profile heatmap and TMI series",
    },
    PresetInfo {
        name: "fig10",
        description: "exchange, two-qubit system, N = 5: profiles along the t grid",
    },
    PresetInfo {
        name: "fig11",
        description: "exchange, both system sizes, N = 10 and 12 at t = 0.3, 0.5, 0.8 (fN <= N/2)",
    },
];

fn grid_runs(system_size: usize, interaction: Interaction, sizes: &[usize], seed: u64) -> Vec<ExperimentSpec> {
    sizes
        .iter()
        .map(|&n| ExperimentSpec::new(system_size, n, interaction, seed))
        .collect()
}

fn large_runs(interaction: Interaction, ts: [f64; 3], seed: u64) -> Vec<ExperimentSpec> {
    let mut runs = Vec::new();
    for system_size in [1, 2] {
        for n in [10, 12] {
            let mut spec = ExperimentSpec::new(system_size, n, interaction, seed);
            spec.t_values = Some(ts.to_vec());
            spec.max_fragment_size = Some(n / 2);
            runs.push(spec);
        }
    }
    runs
}

/// The sweeps making up preset `name`.
pub fn preset_specs(name: &str, seed: u64) -> Result<Vec<ExperimentSpec>> {
    use Interaction::{Dephasing, Exchange};
    Ok(match name {
        "fig2" => [5, 6, 7]
            .into_iter()
            .map(|n| ExperimentSpec {
                source: StateSource::ScrambledExample,
                ..ExperimentSpec::new(1, n, Dephasing, seed)
            })
            .collect(),
        "fig4" => grid_runs(1, Dephasing, &[5, 6], seed),
        "fig5" => grid_runs(1, Dephasing, &[6], seed),
        "fig6" => grid_runs(2, Dephasing, &[4, 5], seed),
        "fig7" => large_runs(Dephasing, [0.05, 0.8, 1.2], seed),
        "fig8" => grid_runs(1, Exchange, &[5, 6], seed),
        "fig9" => grid_runs(2, Exchange, &[5, 6], seed),
        "fig10" => grid_runs(2, Exchange, &[5], seed),
        "fig11" => large_runs(Exchange, [0.3, 0.5, 0.8], seed),
        other => {
            let known: Vec<_> = PRESETS.iter().map(|p| p.name).collect();
            return Err(Error::InvalidSpec(format!(
                "unknown preset {other:?}; known presets: {}",
                known.join(", ")
            )));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_preset_resolves_and_validates() {
        for p in PRESETS {
            let specs = preset_specs(p.name, 1).unwrap();
            assert!(!specs.is_empty());
            for s in &specs {
                s.validate().unwrap();
                assert_eq!((s.epsilon, s.j, s.l), (1.0, 1.0, 2));
                assert_eq!((s.fragment_budget, s.partition_budget), (1000, 1000));
            }
        }
    }

    #[test]
    fn unknown_preset_is_invalid() {
        assert!(matches!(preset_specs("fig3", 0), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn large_presets_use_three_times_and_half_profiles() {
        let specs = preset_specs("fig11", 0).unwrap();
        assert_eq!(specs.len(), 4);
        for s in specs {
            assert_eq!(s.t_grid(), vec![0.3, 0.5, 0.8]);
            assert_eq!(s.max_fragment_size, Some(s.num_ancillas / 2));
        }
    }

    #[test]
    fn labels_are_distinct_within_a_preset() {
        for p in PRESETS {
            let mut labels: Vec<_> = preset_specs(p.name, 0).unwrap().iter().map(|s| s.label()).collect();
            let n = labels.len();
            labels.sort();
            labels.dedup();
            assert_eq!(labels.len(), n);
        }
    }
}
