use serde::{Deserialize, Serialize};

use super::measures::{mask_of, tmi, EntropyTable};
use super::sampling::{select_partitions, PartitionSample};
use crate::error::{Error, Result};
use crate::model::RegisterLayout;
use crate::qcore::StateVector;

/// Which ancillas may play the single-ancilla part `B`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionScope {
    #[default]
    AllAncillas,
    /// `B = E_1` only.
    FirstAncilla,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TmiOptions {
    pub l: usize,
    pub budget: usize,
    pub seed: u64,
    pub scope: PartitionScope,
    pub point: u64,
}

impl TmiOptions {
    pub fn new(l: usize, budget: usize, seed: u64) -> Self {
        Self {
            l,
            budget,
            seed,
            scope: PartitionScope::AllAncillas,
            point: 0,
        }
    }
}

/// Partition-averaged `Ī_3(S:B:C)` at one state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TmiAverage {
    pub mean: f64,
    pub l: usize,
    pub n_partitions: usize,
    pub enumerated: bool,
}

fn partitions_for(layout: &RegisterLayout, opts: &TmiOptions) -> Result<(Vec<PartitionSample>, bool)> {
    let n = layout.num_ancillas();
    if opts.l == 0 || opts.l + 2 > n {
        return Err(Error::invalid(format!(
            "l must satisfy 1 <= l <= N - 2 (N = {n}), got {}",
            opts.l
        )));
    }
    if opts.budget == 0 {
        return Err(Error::invalid("partition budget must be at least 1"));
    }
    let b_choices: Vec<usize> = match opts.scope {
        PartitionScope::AllAncillas => (1..=n).collect(),
        PartitionScope::FirstAncilla => vec![1],
    };
    Ok(select_partitions(n, &b_choices, opts.l, opts.budget, opts.seed, opts.point))
}

/// The partitions [`averaged_tmi_with`] averages over.
pub fn tmi_partitions(layout: &RegisterLayout, opts: &TmiOptions) -> Result<Vec<PartitionSample>> {
    Ok(partitions_for(layout, opts)?.0)
}

pub fn averaged_tmi(
    state: &StateVector,
    layout: &RegisterLayout,
    l: usize,
    budget: usize,
    seed: u64,
) -> Result<TmiAverage> {
    averaged_tmi_with(state, layout, &TmiOptions::new(l, budget, seed))
}

/// Averages `I_3(S:B:C)` over partitions of the environment into a single
/// ancilla `B`, `l` ancillas `C` and a nonempty rest.
pub fn averaged_tmi_with(state: &StateVector, layout: &RegisterLayout, opts: &TmiOptions) -> Result<TmiAverage> {
    if state.num_qubits() != layout.total_qubits() {
        return Err(Error::DimensionMismatch {
            expected: layout.total_qubits(),
            actual: state.num_qubits(),
        });
    }
    let (parts, enumerated) = partitions_for(layout, opts)?;
    let s = mask_of(layout.system_qubits());
    let masks: Vec<(u64, u64)> = parts
        .iter()
        .map(|p| {
            let b = 1u64 << layout.ancilla(p.b);
            let c = mask_of(p.c.iter().map(|&a| layout.ancilla(a)));
            (b, c)
        })
        .collect();

    let mut table = EntropyTable::new(state);
    table.fill(masks.iter().flat_map(|&(b, c)| [s, b, c, s | b, s | c, b | c, s | b | c]))?;

    // H_S + H_B + H_C - H_SB - H_SC - H_BC + H_SBC
    let total: f64 = masks
        .iter()
        .map(|&(b, c)| {
            table.get(s) + table.get(b) + table.get(c) - table.get(s | b) - table.get(s | c) - table.get(b | c)
                + table.get(s | b | c)
        })
        .sum();
    Ok(TmiAverage {
        mean: total / parts.len() as f64,
        l: opts.l,
        n_partitions: parts.len(),
        enumerated,
    })
}

/// `I_3(S:B:C)` for each listed partition, straight from the mutual
/// information form.
pub fn partition_tmi_values(
    state: &StateVector,
    layout: &RegisterLayout,
    parts: &[PartitionSample],
) -> Result<Vec<f64>> {
    let s = layout.system_qubits();
    parts
        .iter()
        .map(|p| {
            let c: Vec<usize> = p.c.iter().map(|&a| layout.ancilla(a)).collect();
            tmi(state, &s, &[layout.ancilla(p.b)], &c)
        })
        .collect()
}

/// One point of a TMI time series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TmiPoint {
    pub t: f64,
    pub mean_bits: f64,
    pub n_partitions: usize,
    pub enumerated: bool,
}

/// `Ī_3` against collision duration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TMISeries {
    pub l: usize,
    pub seed: u64,
    pub entries: Vec<TmiPoint>,
}

impl TMISeries {
    pub fn max(&self) -> Option<&TmiPoint> {
        self.entries.iter().max_by(|a, b| a.mean_bits.total_cmp(&b.mean_bits))
    }

    pub fn min(&self) -> Option<&TmiPoint> {
        self.entries.iter().min_by(|a, b| a.mean_bits.total_cmp(&b.mean_bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{run_collisions, CollisionConfig, InitialStatePreset};

    fn collided(preset: InitialStatePreset, n: usize, t: f64) -> (StateVector, RegisterLayout) {
        let config = CollisionConfig::preset(preset, n, t).unwrap();
        (run_collisions(&config).unwrap(), config.layout)
    }

    #[test]
    fn product_state_averages_to_zero() {
        let layout = RegisterLayout::new(1, 4).unwrap();
        let mut s = StateVector::plus();
        for _ in 0..4 {
            s = s.tensor(&StateVector::zero());
        }
        assert!(averaged_tmi(&s, &layout, 2, 100, 0).unwrap().mean.abs() < 1e-12);
    }

    #[test]
    fn entropy_expansion_matches_mutual_information_form() {
        for preset in InitialStatePreset::ALL {
            let (state, layout) = collided(preset, 5, 0.9);
            let opts = TmiOptions::new(2, 1000, 4);
            let avg = averaged_tmi_with(&state, &layout, &opts).unwrap();
            let parts = tmi_partitions(&layout, &opts).unwrap();
            let direct = partition_tmi_values(&state, &layout, &parts).unwrap();
            let mean = direct.iter().sum::<f64>() / direct.len() as f64;
            assert!((avg.mean - mean).abs() < 1e-10, "{preset:?}");
            assert_eq!(avg.n_partitions, 5 * 6);
            assert!(avg.enumerated);
        }
    }

    #[test]
    fn first_ancilla_scope_restricts_b() {
        let layout = RegisterLayout::new(1, 6).unwrap();
        let mut opts = TmiOptions::new(2, 1000, 0);
        opts.scope = PartitionScope::FirstAncilla;
        let parts = tmi_partitions(&layout, &opts).unwrap();
        assert_eq!(parts.len(), 10);
        assert!(parts.iter().all(|p| p.b == 1));
    }

    #[test]
    fn initial_collision_state_tmi() {
        // At t = 0 the system is correlated with E_1 alone, so whichever of
        // B, BC holds E_1 carries the full 2 bits and every I_3 vanishes.
        let (state, layout) = collided(InitialStatePreset::DephasingSingle, 5, 0.0);
        let avg = averaged_tmi(&state, &layout, 2, 1000, 0).unwrap();
        assert!(avg.mean.abs() < 1e-10);
    }

    #[test]
    fn invalid_l_is_rejected() {
        let (state, layout) = collided(InitialStatePreset::DephasingSingle, 4, 0.3);
        assert!(averaged_tmi(&state, &layout, 3, 100, 0).is_err());
        assert!(averaged_tmi(&state, &layout, 0, 100, 0).is_err());
        assert!(averaged_tmi(&state, &layout, 2, 0, 0).is_err());
    }

    #[test]
    fn budget_caps_partition_count() {
        let (state, layout) = collided(InitialStatePreset::DephasingSingle, 7, 0.8);
        let avg = averaged_tmi(&state, &layout, 2, 20, 1).unwrap();
        assert_eq!(avg.n_partitions, 20);
        assert!(!avg.enumerated);
    }
}
