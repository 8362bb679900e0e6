//! Lazy (three-state) and two-state quantum walks on the line, their ternary
//! circuit realization on qutrit registers, and the tools to check one against
//! the other.
//!
//! * [`statevector`]: dense n-qutrit states and controlled single-qutrit gates.
//! * [`gates`]: the Z permutation gates, Muthukrishnan-Stroud gates and coins.
//! * [`walk`]: direct evolution on the integer line.
//! * [`codec`]: the nearest-neighbour position encoding.
//! * [`synth`]: circuit synthesis for the lazy walk.
//! * [`verify`]: circuit-vs-walk comparison.
//! * [`netlist`]: JSON interchange for synthesized circuits.

pub mod codec;
pub mod error;
pub mod gates;
pub mod matrix;
pub mod netlist;
pub mod statevector;
pub mod synth;
pub mod verify;
pub mod walk;

pub use codec::{left_perm, right_perm, PositionCodec, Variant};
pub use error::{Error, Result};
pub use gates::{coin_matrix, ms_gate, multi_ms_gate, z_matrix, CoinMatrix, CoinSpec, ZKind};
pub use matrix::Matrix3;
pub use num_complex::Complex64;
pub use statevector::{Control, GateOp, StateVector};
pub use synth::{gate_report, synth_step, synth_walk, Circuit, GateKind, Schedule, SynthConfig};
pub use verify::{verify, VerifyReport};
pub use walk::{evolve, InitialCoin, WalkConfig, WalkKind, WalkState};
