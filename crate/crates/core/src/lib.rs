//! DC power flow solved two ways: a direct linear solve, and a full
//! statevector simulation of the quantum linear-systems pipeline
//! (phase estimation, eigenvalue-conditioned ancilla rotation, uncompute,
//! post-selection), plus line-flow estimation from the quantum readout and
//! circuit resource accounting.
//!
//! Module map:
//! - [`numerics`]: small dense linear algebra (symmetric eigendecomposition,
//!   matrix exponentials, direct solves).
//! - [`grid`]: network ingestion, susceptance matrices, slack-bus reduction,
//!   classical solution, line flows.
//! - [`qsim`]: dense statevector simulator with registers, gates, QFT,
//!   post-selection, shot sampling and resource counts.
//! - [`hhl`]: the quantum linear-solver pipeline over a reduced grid system.
//! - [`flowmeter`]: line-flow estimation from the post-selected solution
//!   register.

pub mod flowmeter;
pub mod grid;
pub mod hhl;
pub mod numerics;
pub mod qsim;
