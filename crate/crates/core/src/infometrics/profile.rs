use serde::{Deserialize, Serialize};

use super::measures::{mask_of, EntropyTable};
use super::sampling::select_fragments;
use crate::error::{Error, Result};
use crate::model::RegisterLayout;
use crate::qcore::StateVector;

/// Below this system entropy (bits) normalized quantities are undefined.
pub const MIN_SYSTEM_ENTROPY: f64 = 1e-9;

/// Fragment-averaged mutual information at one fragment size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileEntry {
    /// Fragment size `fN`.
    pub size: usize,
    pub mean_bits: f64,
    pub n_samples: usize,
    /// True when every fragment of this size was used.
    pub enumerated: bool,
}

/// `Ī(S : F_f)` as a function of fragment size, with the system entropy.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MIProfile {
    pub num_ancillas: usize,
    pub system_entropy: f64,
    /// One entry per size `0, 1, …`, up to `N` or a requested cutoff.
    pub entries: Vec<ProfileEntry>,
    pub seed: u64,
}

impl MIProfile {
    pub fn mean(&self, size: usize) -> Option<f64> {
        self.entries.get(size).map(|e| e.mean_bits)
    }

    /// `Ī(k) / H_S`, or `None` past the end or when `H_S` vanishes.
    pub fn normalized(&self, size: usize) -> Option<f64> {
        if self.system_entropy < MIN_SYSTEM_ENTROPY {
            return None;
        }
        self.mean(size).map(|m| m / self.system_entropy)
    }

    pub fn max_size(&self) -> usize {
        self.entries.len() - 1
    }

    fn require_entropy(&self) -> Result<f64> {
        if self.system_entropy < MIN_SYSTEM_ENTROPY {
            Err(Error::DegenerateSystemEntropy(self.system_entropy))
        } else {
            Ok(self.system_entropy)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProfileOptions {
    /// Maximum fragments per size.
    pub budget: usize,
    pub seed: u64,
    /// Largest fragment size evaluated; `None` means `N`.
    pub max_fragment_size: Option<usize>,
    /// Sweep point index, mixed into the sampling streams.
    pub point: u64,
}

impl ProfileOptions {
    pub fn new(budget: usize, seed: u64) -> Self {
        Self {
            budget,
            seed,
            max_fragment_size: None,
            point: 0,
        }
    }
}

/// Averages `I(S : F)` over fragments `F` of every size `0..=N`.
pub fn averaged_mi_profile(
    state: &StateVector,
    layout: &RegisterLayout,
    budget: usize,
    seed: u64,
) -> Result<MIProfile> {
    averaged_mi_profile_with(state, layout, &ProfileOptions::new(budget, seed))
}

pub fn averaged_mi_profile_with(
    state: &StateVector,
    layout: &RegisterLayout,
    opts: &ProfileOptions,
) -> Result<MIProfile> {
    if opts.budget == 0 {
        return Err(Error::invalid("fragment budget must be at least 1"));
    }
    if state.num_qubits() != layout.total_qubits() {
        return Err(Error::DimensionMismatch {
            expected: layout.total_qubits(),
            actual: state.num_qubits(),
        });
    }
    let n = layout.num_ancillas();
    let k_max = opts.max_fragment_size.unwrap_or(n).min(n);
    let sys = mask_of(layout.system_qubits());
    let frag_mask = |ancillas: &[usize]| mask_of(ancillas.iter().map(|&a| layout.ancilla(a)));

    let draws: Vec<_> = (1..=k_max)
        .map(|k| select_fragments(n, k, opts.budget, opts.seed, opts.point))
        .collect();

    let mut table = EntropyTable::new(state);
    let masks = draws
        .iter()
        .flat_map(|(frags, _)| frags)
        .flat_map(|f| {
            let m = frag_mask(&f.ancillas);
            [m, m | sys]
        });
    table.fill(masks.chain([sys]))?;

    let h_s = table.get(sys);
    let mut entries = vec![ProfileEntry {
        size: 0,
        mean_bits: 0.0,
        n_samples: 1,
        enumerated: true,
    }];
    for (k, (frags, enumerated)) in (1..).zip(draws) {
        let total: f64 = frags
            .iter()
            .map(|f| {
                let m = frag_mask(&f.ancillas);
                h_s + table.get(m) - table.get(m | sys)
            })
            .sum();
        entries.push(ProfileEntry {
            size: k,
            mean_bits: total / frags.len() as f64,
            n_samples: frags.len(),
            enumerated,
        });
    }
    Ok(MIProfile {
        num_ancillas: n,
        system_entropy: h_s,
        entries,
        seed: opts.seed,
    })
}

/// Outcome of a redundancy search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Redundancy {
    /// `k` ancillas suffice; `f = k / N`.
    Fraction { size: usize, fraction: f64 },
    /// No fragment smaller than half the environment reaches the threshold.
    NoRedundancy,
}

impl Redundancy {
    pub fn fraction(self) -> Option<f64> {
        match self {
            Redundancy::Fraction { fraction, .. } => Some(fraction),
            Redundancy::NoRedundancy => None,
        }
    }
}

/// Slack on threshold comparisons, so that exactly-attained values count.
const COMPARE_TOL: f64 = 1e-12;

/// Smallest `f = k/N < 1/2` with `Ī(k) ≥ (1 - δ) H_S`.
///
/// For a pure global state `Ī(N/2) = H_S` always, so needing half the
/// environment or more is reported as [`Redundancy::NoRedundancy`].
pub fn redundancy_fraction(profile: &MIProfile, delta: f64) -> Result<Redundancy> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::invalid(format!("delta must lie in (0, 1), got {delta}")));
    }
    let h_s = profile.require_entropy()?;
    let n = profile.num_ancillas;
    let limit = ((n - 1) / 2).min(profile.max_size());
    let target = (1.0 - delta) * h_s - COMPARE_TOL;
    Ok((1..=limit)
        .find(|&k| profile.entries[k].mean_bits >= target)
        .map_or(Redundancy::NoRedundancy, |k| Redundancy::Fraction {
            size: k,
            fraction: k as f64 / n as f64,
        }))
}

/// Profile shapes: a redundant plateau, roughly linear growth, or an S-shape
/// that stays below the diagonal until half the environment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileClass {
    Plateau,
    Independent,
    Encoding,
}

impl std::fmt::Display for ProfileClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProfileClass::Plateau => "plateau",
            ProfileClass::Independent => "independent",
            ProfileClass::Encoding => "encoding",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyThresholds {
    /// Information deficit used for the redundancy fraction.
    pub delta: f64,
    /// A plateau needs `f_δ ≤ plateau_max_size / N`.
    pub plateau_max_size: usize,
    /// How far below the diagonal `2k/N` an encoding profile must stay, in
    /// units of `H_S`.
    pub encoding_margin: f64,
}

impl Default for ClassifyThresholds {
    fn default() -> Self {
        Self {
            delta: 0.1,
            plateau_max_size: 2,
            encoding_margin: 0.01,
        }
    }
}

pub fn classify_profile(profile: &MIProfile, thresholds: &ClassifyThresholds) -> Result<ProfileClass> {
    let h_s = profile.require_entropy()?;
    if let Redundancy::Fraction { size, .. } = redundancy_fraction(profile, thresholds.delta)? {
        if size <= thresholds.plateau_max_size {
            return Ok(ProfileClass::Plateau);
        }
    }
    let n = profile.num_ancillas as f64;
    let below: Vec<bool> = (1..=profile.max_size())
        .filter(|&k| 2 * k < profile.num_ancillas)
        .map(|k| profile.entries[k].mean_bits / h_s < 2.0 * k as f64 / n - thresholds.encoding_margin)
        .collect();
    if !below.is_empty() && below.iter().all(|&b| b) {
        Ok(ProfileClass::Encoding)
    } else {
        Ok(ProfileClass::Independent)
    }
}
