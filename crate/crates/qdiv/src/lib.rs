//! Synthesis, lowering, simulation and resource analysis of restoring
//! integer-division quantum circuits.
//!
//! The crate builds an n-qubit-operand restoring divider over the
//! classical-reversible gate set `{X, CNOT, Toffoli, Peres}`, lowers it to
//! Clifford+T, verifies its function by reversible simulation against a
//! classical reference model, and tallies T-count and ancilla usage against
//! closed forms. The divider spans `3n` qubits (dividend, divisor, and `n`
//! ancillae), keeps the divisor intact, and leaves no garbage: after `n`
//! iterations every qubit holds either the quotient, the remainder or the
//! preserved divisor.
//!
//! Modules:
//!
//! * [`gate`], [`circuit`], [`layout`] — the gate alphabet, the append-only
//!   circuit container with OpenQASM 2.0 export, and register bookkeeping.
//! * [`lowering`] — `Peres -> {Toffoli, CNOT}` and the 7-T Toffoli network.
//! * [`synth`] — adder, subtractor, conditional adder and the divider.
//! * [`sim`] — permutation and state-vector simulators plus unitary checks.
//! * [`resources`] — gate tallies, `35n^2 - 28n`, and the baseline
//!   comparison.
//! * [`refmodel`] — the classical restoring-division schedule used as the
//!   oracle.

pub mod circuit;
pub mod error;
pub mod gate;
pub mod layout;
pub mod lowering;
pub mod refmodel;
pub mod resources;
pub mod sim;
pub mod synth;

pub use circuit::{Circuit, Level};
pub use error::{Error, Result};
pub use gate::{Gate, GateKind};
pub use layout::RegisterLayout;
pub use synth::DividerInstance;
