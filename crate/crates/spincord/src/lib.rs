//! Correlation measures for small Heisenberg spin clusters.
//!
//! The crate computes the mutual information, classical correlation, quantum
//! discord and concurrence of the two-qubit reduced states of a symmetric
//! spin-1/2 trimer and a frustrated tetramer — ground states, Gibbs thermal
//! states, states in a magnetic field, and Werner states evolving under a
//! local dephasing channel.
//!
//! Layout:
//! - [`qcore`] — dense complex matrices, a Jacobi eigensolver, partial
//!   traces, entropies, Gibbs and ground-state mixtures;
//! - [`xstate`] — two-qubit X states, the closed-form correlation measures
//!   and their general numeric counterparts;
//! - [`clusters`] — trimer/tetramer Hamiltonians, spectra, reduced thermal
//!   and ground states, transition scans;
//! - [`decoherence`] — Werner states under local dephasing;
//! - [`cli`] — the `spincord` command-line surface (sweeps, CSV, `verify`).

pub mod cli;
pub mod clusters;
pub mod decoherence;
pub mod qcore;
pub mod xstate;
