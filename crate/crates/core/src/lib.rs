//! Information-geometric measures of quantum coherence (asymmetry) and entanglement witnesses.
//!
//! The crate is organized in layers:
//!
//! - [`quantum`]: validated states and observables, Pauli strings, spectral decomposition,
//!   unitary phase evolution and the probe families.
//! - [`metrics`]: variance, SLD quantum Fisher information, the monotone-metric family,
//!   Wigner-Yanase skew information, classical Fisher information of a POVM and Cramér-Rao bounds.
//! - [`bound`]: the purity/overlap lower bound, averaged spin witnesses, k-separability
//!   thresholds and the Bell-diagonal threshold table.
//! - [`measurement`]: swap-operator and Bell-projection estimation, controlled-swap
//!   interferometry, three-qubit X-state correlators and finite-shot sampling.
//! - [`report`]: CSV/JSON report rows and the `qrg` command-line driver.

pub mod bound;
pub mod cli;
pub mod error;
pub mod measurement;
pub mod metrics;
pub mod quantum;
pub mod random;
pub mod report;

pub use error::{Error, Result};
