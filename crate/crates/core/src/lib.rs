//! Collision-model simulation of a one- or two-qubit system that interacts
//! sequentially with a chain of environment qubits, plus the entropy-based
//! measures used to tell redundant records of the system (quantum Darwinism)
//! apart from delocalized ones (scrambling).
//!
//! The crate is organised bottom-up:
//!
//! - [`qcore`]: dense complex linear algebra on qubit registers.
//! - [`model`]: Hamiltonians, collision unitaries, initial states and the
//!   sequential collision run.
//! - [`infometrics`]: mutual information, fragment-averaged profiles,
//!   tripartite mutual information and profile classification.
//! - [`experiment`]: sweeps over the collision duration, figure presets and
//!   deterministic CSV/JSON output (driven by the `qdscram` binary).
//!
//! Entropies are in bits throughout. Qubit 0 is the most significant bit of
//! a basis index.
//!
//! ```
//! use qdscram::model::{run_collisions, CollisionConfig, InitialStatePreset};
//! use qdscram::infometrics::averaged_tmi;
//!
//! let config = CollisionConfig::preset(InitialStatePreset::DephasingSingle, 6, 0.8).unwrap();
//! let state = run_collisions(&config).unwrap();
//! let i3 = averaged_tmi(&state, &config.layout, 2, 1000, 7).unwrap();
//! assert!(i3.mean > 0.99);
//! ```

pub mod error;
pub mod experiment;
pub mod infometrics;
pub mod model;
pub mod qcore;

pub use error::{Error, Result};
