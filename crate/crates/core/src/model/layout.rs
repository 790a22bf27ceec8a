use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on register size: a two-qubit system plus twelve ancillas.
pub const MAX_QUBITS: usize = 14;

/// Role of a qubit in the register.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// System qubit `S_i`, zero-based.
    System(usize),
    /// Environment ancilla `E_k`, one-based as in `E_1 … E_N`.
    Ancilla(usize),
}

/// System qubits occupy indices `0..system_size`, followed by `E_1 … E_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegisterLayout {
    system_size: usize,
    num_ancillas: usize,
}

impl RegisterLayout {
    pub fn new(system_size: usize, num_ancillas: usize) -> Result<Self> {
        Self::with_cap(system_size, num_ancillas, MAX_QUBITS)
    }

    pub fn with_cap(system_size: usize, num_ancillas: usize, cap: usize) -> Result<Self> {
        if !(1..=2).contains(&system_size) {
            return Err(Error::invalid(format!(
                "system size must be 1 or 2 qubits, got {system_size}"
            )));
        }
        if num_ancillas < 2 {
            return Err(Error::invalid(format!(
                "need at least 2 ancillas, got {num_ancillas}"
            )));
        }
        let total = system_size + num_ancillas;
        if total > cap {
            return Err(Error::CapExceeded {
                requested: total,
                cap,
            });
        }
        Ok(Self {
            system_size,
            num_ancillas,
        })
    }

    pub fn system_size(&self) -> usize {
        self.system_size
    }

    pub fn num_ancillas(&self) -> usize {
        self.num_ancillas
    }

    pub fn total_qubits(&self) -> usize {
        self.system_size + self.num_ancillas
    }

    pub fn system_qubits(&self) -> Vec<usize> {
        (0..self.system_size).collect()
    }

    /// Register index of ancilla `E_k` (`k` is one-based).
    pub fn ancilla(&self, k: usize) -> usize {
        assert!(
            (1..=self.num_ancillas).contains(&k),
            "ancilla E_{k} outside 1..={}",
            self.num_ancillas
        );
        self.system_size + k - 1
    }

    pub fn ancilla_qubits(&self) -> Vec<usize> {
        (self.system_size..self.total_qubits()).collect()
    }

    pub fn role(&self, qubit: usize) -> Option<Role> {
        if qubit < self.system_size {
            Some(Role::System(qubit))
        } else if qubit < self.total_qubits() {
            Some(Role::Ancilla(qubit - self.system_size + 1))
        } else {
            None
        }
    }
}
