use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qcore::StateVector;

fn check_disjoint(parts: &[&[usize]]) -> Result<()> {
    let mut seen = 0u64;
    for part in parts {
        for &q in *part {
            if q >= 64 {
                return Err(Error::QubitOutOfRange { index: q, num_qubits: 64 });
            }
            if seen & (1 << q) != 0 {
                return Err(Error::OverlappingParts(q));
            }
            seen |= 1 << q;
        }
    }
    Ok(())
}

/// `I(A:B) = H_A + H_B - H_AB` in bits.
pub fn mutual_information(state: &StateVector, part_a: &[usize], part_b: &[usize]) -> Result<f64> {
    check_disjoint(&[part_a, part_b])?;
    let joint: Vec<usize> = part_a.iter().chain(part_b).copied().collect();
    Ok(state.subsystem_entropy(part_a)? + state.subsystem_entropy(part_b)?
        - state.subsystem_entropy(&joint)?)
}

/// `I_3(A:B:C) = I(A:B) + I(A:C) - I(A:BC)` in bits.
pub fn tmi(state: &StateVector, a: &[usize], b: &[usize], c: &[usize]) -> Result<f64> {
    check_disjoint(&[a, b, c])?;
    let bc: Vec<usize> = b.iter().chain(c).copied().collect();
    Ok(mutual_information(state, a, b)? + mutual_information(state, a, c)?
        - mutual_information(state, a, &bc)?)
}

pub(crate) fn mask_of(qubits: impl IntoIterator<Item = usize>) -> u64 {
    qubits.into_iter().fold(0, |m, q| m | (1 << q))
}

fn qubits_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|q| mask & (1 << q) != 0).collect()
}

/// Memo of subsystem entropies of one pure state, keyed by qubit bitmask.
///
/// A subset and its complement share a key, since their marginals have the
/// same nonzero spectrum.
pub(crate) struct EntropyTable<'a> {
    state: &'a StateVector,
    full: u64,
    values: HashMap<u64, f64>,
}

impl<'a> EntropyTable<'a> {
    pub fn new(state: &'a StateVector) -> Self {
        let n = state.num_qubits();
        Self {
            state,
            full: if n == 64 { u64::MAX } else { (1 << n) - 1 },
            values: HashMap::new(),
        }
    }

    fn key(&self, mask: u64) -> u64 {
        mask.min(self.full ^ mask)
    }

    /// Computes every missing entry in parallel.
    pub fn fill(&mut self, masks: impl IntoIterator<Item = u64>) -> Result<()> {
        let mut missing: Vec<u64> = masks
            .into_iter()
            .map(|m| self.key(m))
            .filter(|k| !self.values.contains_key(k))
            .collect();
        missing.sort_unstable();
        missing.dedup();
        let state = self.state;
        let computed: Vec<Result<f64>> = missing
            .par_iter()
            .map(|&m| state.subsystem_entropy(&qubits_of(m)))
            .collect();
        for (m, h) in missing.into_iter().zip(computed) {
            self.values.insert(m, h?);
        }
        Ok(())
    }

    pub fn get(&self, mask: u64) -> f64 {
        self.values[&self.key(mask)]
    }
}
