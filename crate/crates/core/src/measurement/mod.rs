//! Simulated detection schemes for purity and overlap.
//!
//! Two routes are provided. [`bell`] estimates both quantities from singlet projections on
//! copy pairs of a two-qubit register, analytically or from finite shots. [`xstate`] rebuilds
//! three-qubit X-states and their overlaps from fifteen Pauli correlators. Both rely on the
//! swap operator of [`swap`] and the Born-rule sampler of [`sampling`].

pub mod bell;
pub mod sampling;
pub mod swap;
pub mod xstate;

pub use bell::{bell_projection_estimate, BellProjectionEstimate, EstimationMode, TwoCopyRegister};
pub use sampling::{sample_shots, EstimateWithError, ProjectiveMeasurement, ShotSample};
pub use swap::{controlled_swap_interferometry, factorized_swap, singlet_projector, swap_operator};
pub use xstate::{
    overlap_via_correlator_shots, overlap_via_correlators, xstate_correlators, xstate_reconstruct,
    XSTATE_STRINGS,
};
