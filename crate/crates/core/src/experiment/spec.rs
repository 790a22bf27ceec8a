use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::infometrics::PartitionScope;
use crate::model::{CollisionConfig, CouplingSpec, InitialStatePreset, RegisterLayout, SystemCoupling};

/// System–ancilla coupling family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interaction {
    /// `J σz ⊗ σz`
    Dephasing,
    /// `J (σx ⊗ σx + σy ⊗ σy)`
    Exchange,
}

/// Where the analysed states come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StateSource {
    /// Sequential collisions, one state per grid value of `t`.
    #[default]
    Collision,
    /// The fixed Dicke-type scrambled example; reported at `t = 0`.
    ScrambledExample,
}

fn one() -> f64 {
    1.0
}
fn default_system_size() -> usize {
    1
}
fn default_l() -> usize {
    2
}
fn default_budget() -> usize {
    1000
}
fn default_t_start() -> f64 {
    0.05
}
fn default_t_stop() -> f64 {
    3.0
}
fn default_t_points() -> usize {
    60
}

/// A single sweep, as read from a flat JSON object.
///
/// Only `num_ancillas`, `interaction` and `seed` are required; the rest
/// default to `ε = J = 1`, `l = 2`, 1000-sample budgets and a 60-point grid on
/// `[0.05, 3.0]`. An explicit `t_values` list replaces the grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    /// Output subdirectory name; derived from the parameters when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub source: StateSource,
    #[serde(default = "default_system_size")]
    pub system_size: usize,
    pub num_ancillas: usize,
    pub interaction: Interaction,
    #[serde(default = "one")]
    pub epsilon: f64,
    #[serde(default = "one")]
    pub j: f64,
    #[serde(default = "default_l")]
    pub l: usize,
    #[serde(default = "default_t_start")]
    pub t_start: f64,
    #[serde(default = "default_t_stop")]
    pub t_stop: f64,
    #[serde(default = "default_t_points")]
    pub t_points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_values: Option<Vec<f64>>,
    #[serde(default = "default_budget")]
    pub fragment_budget: usize,
    #[serde(default = "default_budget")]
    pub partition_budget: usize,
    pub seed: u64,
    #[serde(default)]
    pub coupled_system_qubit: SystemCoupling,
    #[serde(default)]
    pub idle_ancilla_phases: bool,
    #[serde(default)]
    pub partition_scope: PartitionScope,
    /// Profiles stop at this fragment size (e.g. `N/2` for large runs).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_fragment_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
}

impl ExperimentSpec {
    /// Defaults for everything but the required fields.
    pub fn new(system_size: usize, num_ancillas: usize, interaction: Interaction, seed: u64) -> Self {
        Self {
            label: None,
            source: StateSource::Collision,
            system_size,
            num_ancillas,
            interaction,
            epsilon: 1.0,
            j: 1.0,
            l: default_l(),
            t_start: default_t_start(),
            t_stop: default_t_stop(),
            t_points: default_t_points(),
            t_values: None,
            fragment_budget: default_budget(),
            partition_budget: default_budget(),
            seed,
            coupled_system_qubit: SystemCoupling::default(),
            idle_ancilla_phases: false,
            partition_scope: PartitionScope::default(),
            max_fragment_size: None,
            out_dir: None,
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json_str(&text)
    }

    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| match self.source {
            StateSource::ScrambledExample => format!("scrambled-N{}", self.num_ancillas),
            StateSource::Collision => format!(
                "{}-{}-N{}",
                match self.interaction {
                    Interaction::Dephasing => "dephasing",
                    Interaction::Exchange => "exchange",
                },
                if self.system_size == 1 { "single" } else { "pair" },
                self.num_ancillas
            ),
        })
    }

    /// The collision durations to evaluate, in order.
    pub fn t_grid(&self) -> Vec<f64> {
        if self.source == StateSource::ScrambledExample {
            return vec![0.0];
        }
        if let Some(ts) = &self.t_values {
            return ts.clone();
        }
        match self.t_points {
            0 => Vec::new(),
            1 => vec![self.t_start],
            n => {
                let step = (self.t_stop - self.t_start) / (n - 1) as f64;
                (0..n).map(|i| self.t_start + step * i as f64).collect()
            }
        }
    }

    pub fn layout(&self) -> Result<RegisterLayout> {
        RegisterLayout::new(self.system_size, self.num_ancillas)
    }

    /// The collision configuration at duration `t`.
    pub fn collision_config(&self, t: f64) -> Result<CollisionConfig> {
        let preset = InitialStatePreset::from_parts(self.system_size, self.interaction == Interaction::Dephasing)?;
        let couplings = match self.interaction {
            Interaction::Dephasing => CouplingSpec::dephasing(self.j, self.epsilon),
            Interaction::Exchange => CouplingSpec::exchange(self.j, self.epsilon),
        };
        Ok(CollisionConfig {
            layout: self.layout()?,
            couplings,
            duration: t,
            initial_state: preset,
            coupled_system_qubit: self.coupled_system_qubit,
            idle_ancilla_phases: self.idle_ancilla_phases,
        })
    }

    /// Checks everything that can be checked without running. Register-size
    /// violations come back as [`Error::CapExceeded`].
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        let layout = self.layout().map_err(|e| match e {
            Error::InvalidArgument(m) => Error::InvalidSpec(m),
            other => other,
        })?;
        if self.source == StateSource::ScrambledExample && self.system_size != 1 {
            return bad("the scrambled example has a single-qubit system".into());
        }
        if self.l == 0 || self.l + 2 > self.num_ancillas {
            return bad(format!("l must satisfy 1 <= l <= N - 2, got l = {} with N = {}", self.l, self.num_ancillas));
        }
        if self.fragment_budget == 0 || self.partition_budget == 0 {
            return bad("sample budgets must be at least 1".into());
        }
        if let Some(k) = self.max_fragment_size {
            if k == 0 || k > layout.num_ancillas() {
                return bad(format!("max_fragment_size must lie in 1..=N, got {k}"));
            }
        }
        for v in [self.epsilon, self.j, self.t_start, self.t_stop] {
            if !v.is_finite() {
                return bad("coupling strengths and grid bounds must be finite".into());
            }
        }
        let grid = self.t_grid();
        if grid.is_empty() {
            return bad("the t grid is empty".into());
        }
        if let Some(t) = grid.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
            return bad(format!("collision durations must be finite and >= 0, got {t}"));
        }
        if let Some(label) = &self.label {
            if label.is_empty() || label.contains(['/', '\\']) || label == "." || label == ".." {
                return bad(format!("label {label:?} is not a plain directory name"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_json_takes_defaults() {
        let spec = ExperimentSpec::from_json_str(r#"{"num_ancillas": 5, "interaction": "exchange", "seed": 3}"#).unwrap();
        assert_eq!(spec, ExperimentSpec::new(1, 5, Interaction::Exchange, 3));
        let grid = spec.t_grid();
        assert_eq!(grid.len(), 60);
        assert_eq!(grid[0], 0.05);
        assert!((grid[59] - 3.0).abs() < 1e-12);
        spec.validate().unwrap();
    }

    #[test]
    fn seed_is_required_and_unknown_keys_rejected() {
        assert!(ExperimentSpec::from_json_str(r#"{"num_ancillas": 5, "interaction": "exchange"}"#).is_err());
        assert!(ExperimentSpec::from_json_str(r#"{"num_ancillas": 5, "interaction": "exchange", "seed": 1, "colour": 2}"#).is_err());
    }

    #[test]
    fn explicit_values_replace_grid() {
        let mut spec = ExperimentSpec::new(2, 4, Interaction::Dephasing, 0);
        spec.t_values = Some(vec![0.3, 0.1]);
        assert_eq!(spec.t_grid(), vec![0.3, 0.1]);
        assert_eq!(spec.label(), "dephasing-pair-N4");
    }

    #[test]
    fn validation_errors() {
        let base = ExperimentSpec::new(1, 4, Interaction::Dephasing, 0);
        let mut s = base.clone();
        s.l = 3;
        assert!(matches!(s.validate(), Err(Error::InvalidSpec(_))));
        let mut s = base.clone();
        s.t_values = Some(vec![-1.0]);
        assert!(s.validate().is_err());
        let mut s = base.clone();
        s.system_size = 3;
        assert!(matches!(s.validate(), Err(Error::InvalidSpec(_))));
        let mut s = base.clone();
        s.num_ancillas = 20;
        assert!(matches!(s.validate(), Err(Error::CapExceeded { .. })));
        let mut s = base;
        s.label = Some("../x".into());
        assert!(s.validate().is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut spec = ExperimentSpec::new(2, 5, Interaction::Exchange, 11);
        spec.max_fragment_size = Some(2);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(ExperimentSpec::from_json_str(&text).unwrap(), spec);
    }
}
