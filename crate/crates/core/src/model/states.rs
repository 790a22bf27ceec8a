//! Initial states of the collision runs and the analytic example states.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::hamiltonian::CouplingSpec;
use super::layout::RegisterLayout;
use crate::error::{Error, Result};
use crate::qcore::StateVector;

const ORTHO_TOL: f64 = 1e-10;

/// The four initial-state choices of the collision runs.
///
/// All of them entangle the system with `E_1` through
/// `(|−+⟩ + |+−⟩)/√2` (single qubit) or `(|−+−⟩ + |+−+⟩)/√2` (system pair,
/// `E_1` last); the remaining ancillas start in `|+⟩` for dephasing and in
/// `|0⟩` for exchange.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitialStatePreset {
    DephasingSingle,
    DephasingPair,
    ExchangeSingle,
    ExchangePair,
}

impl InitialStatePreset {
    pub const ALL: [InitialStatePreset; 4] = [
        Self::DephasingSingle,
        Self::DephasingPair,
        Self::ExchangeSingle,
        Self::ExchangePair,
    ];

    pub fn system_size(self) -> usize {
        match self {
            Self::DephasingSingle | Self::ExchangeSingle => 1,
            Self::DephasingPair | Self::ExchangePair => 2,
        }
    }

    pub fn is_dephasing(self) -> bool {
        matches!(self, Self::DephasingSingle | Self::DephasingPair)
    }

    /// Couplings that go with this preset (`J` on the relevant axes).
    pub fn couplings(self, j: f64, epsilon: f64) -> CouplingSpec {
        if self.is_dephasing() {
            CouplingSpec::dephasing(j, epsilon)
        } else {
            CouplingSpec::exchange(j, epsilon)
        }
    }

    pub fn from_parts(system_size: usize, dephasing: bool) -> Result<Self> {
        match (system_size, dephasing) {
            (1, true) => Ok(Self::DephasingSingle),
            (2, true) => Ok(Self::DephasingPair),
            (1, false) => Ok(Self::ExchangeSingle),
            (2, false) => Ok(Self::ExchangePair),
            _ => Err(Error::invalid(format!("no preset for system size {system_size}"))),
        }
    }
}

/// `|ψ_0⟩ = |φ_{S E_1}⟩ ⊗ |η⟩^{⊗(N-1)}`.
pub fn initial_state(preset: InitialStatePreset, layout: &RegisterLayout) -> Result<StateVector> {
    if preset.system_size() != layout.system_size() {
        return Err(Error::invalid(format!(
            "preset {preset:?} needs a {}-qubit system, layout has {}",
            preset.system_size(),
            layout.system_size()
        )));
    }
    let (p, m) = (StateVector::plus(), StateVector::minus());
    let (first, second) = if preset.system_size() == 1 {
        (m.tensor(&p), p.tensor(&m))
    } else {
        (m.tensor(&p).tensor(&m), p.tensor(&m).tensor(&p))
    };
    let phi = StateVector::normalized(
        first.num_qubits(),
        first
            .amplitudes()
            .iter()
            .zip(second.amplitudes())
            .map(|(a, b)| a + b)
            .collect(),
    )?;
    let eta = if preset.is_dephasing() {
        StateVector::plus()
    } else {
        StateVector::zero()
    };
    Ok((2..=layout.num_ancillas()).fold(phi, |acc, _| acc.tensor(&eta)))
}

/// `|D_n^{(d)}⟩`: equal superposition of the `C(n, d)` basis states with
/// Hamming weight `d`.
pub fn dicke_state(n: usize, d: usize) -> Result<StateVector> {
    if d > n {
        return Err(Error::invalid(format!("Dicke excitation {d} exceeds {n} qubits")));
    }
    let dim = 1usize << n;
    let weight = 1.0 / (binomial(n, d) as f64).sqrt();
    let amps = (0..dim)
        .map(|i| {
            if i.count_ones() as usize == d {
                C64::new(weight, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
        .collect();
    StateVector::new(n, amps)
}

/// `Σ_k α_k |φ_k⟩ ⊗ |η_k^1⟩ ⊗ … ⊗ |η_k^N⟩`.
///
/// `environment[j][k]` is `|η_k^{j+1}⟩`; each site's branch states must be
/// orthonormal, as must the pointer states.
pub fn branching_state(
    alphas: &[C64],
    pointers: &[StateVector],
    environment: &[Vec<StateVector>],
) -> Result<StateVector> {
    let k = alphas.len();
    if k == 0 || pointers.len() != k {
        return Err(Error::invalid("need one pointer state per amplitude"));
    }
    let weight: f64 = alphas.iter().map(|a| a.norm_sqr()).sum();
    if (weight - 1.0).abs() > ORTHO_TOL {
        return Err(Error::invalid(format!("Σ|α_k|² = {weight}, expected 1")));
    }
    check_orthonormal(pointers, "pointer states")?;
    for (j, site) in environment.iter().enumerate() {
        if site.len() != k {
            return Err(Error::invalid(format!(
                "site {} has {} branch states, expected {k}",
                j + 1,
                site.len()
            )));
        }
        check_orthonormal(site, &format!("site {} states", j + 1))?;
    }

    let branches: Vec<StateVector> = (0..k)
        .map(|b| {
            environment
                .iter()
                .fold(pointers[b].clone(), |acc, site| acc.tensor(&site[b]))
        })
        .collect();
    let n = branches[0].num_qubits();
    let mut amps = vec![C64::new(0.0, 0.0); branches[0].dim()];
    for (alpha, branch) in alphas.iter().zip(&branches) {
        for (a, &b) in amps.iter_mut().zip(branch.amplitudes()) {
            *a += alpha * b;
        }
    }
    StateVector::new(n, amps)
}

/// Branching state of a qubit system with computational-basis pointer and
/// record states: `Σ_k α_k |k⟩|k⟩^{⊗N}` for `k ∈ {0, 1}`.
pub fn branching_state_computational(alphas: &[C64], num_ancillas: usize) -> Result<StateVector> {
    if alphas.len() > 2 {
        return Err(Error::invalid("qubit branches support at most two amplitudes"));
    }
    let basis = [StateVector::zero(), StateVector::one()];
    let pointers = basis[..alphas.len()].to_vec();
    let env = vec![pointers.clone(); num_ancillas];
    branching_state(alphas, &pointers, &env)
}

/// `(|0⟩|D_n^{(2)}⟩ + |1⟩|D_n^{(1)}⟩)/√2`.
pub fn scrambled_example_state(n: usize) -> Result<StateVector> {
    if n < 2 {
        return Err(Error::invalid(format!("need at least 2 ancillas, got {n}")));
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let a = StateVector::zero().tensor(&dicke_state(n, 2)?);
    let b = StateVector::one().tensor(&dicke_state(n, 1)?);
    StateVector::new(
        n + 1,
        a.amplitudes()
            .iter()
            .zip(b.amplitudes())
            .map(|(x, y)| (x + y) * s)
            .collect(),
    )
}

fn check_orthonormal(states: &[StateVector], what: &str) -> Result<()> {
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate().skip(i) {
            if a.num_qubits() != b.num_qubits() {
                return Err(Error::invalid(format!("{what} have mixed sizes")));
            }
            let expected = if i == j { 1.0 } else { 0.0 };
            if (a.inner(b) - C64::new(expected, 0.0)).norm() > ORTHO_TOL {
                return Err(Error::invalid(format!("{what} are not orthonormal")));
            }
        }
    }
    Ok(())
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
