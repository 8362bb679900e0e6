//! Amplitude-by-amplitude comparison of synthesized circuits against the
//! reference walk.

use serde::Serialize;

use crate::codec::PositionCodec;
use crate::error::{Error, Result};
use crate::matrix::ZERO;
use crate::statevector::{pow3, StateVector};
use crate::synth::{apply_all, synth_walk, SynthConfig};
use crate::walk::{trajectory, WalkConfig, WalkKind, WalkState};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Places a ternary walk state on a `(q + 1)`-qutrit register: coin on wire 0,
/// positions mapped through `codec`.
pub fn encode_walk_state(walk: &WalkState, codec: &PositionCodec) -> Result<StateVector> {
    if walk.coin_dimension() != 3 {
        return Err(Error::CoinDimension { coin: walk.coin_dimension(), walk: 3 });
    }
    let coin_stride = pow3(codec.q());
    let mut amps = vec![ZERO; 3 * coin_stride];
    for x in walk.positions() {
        let position = codec.encode_index(x)?;
        let v = walk.coin_vector(x).expect("occupied position");
        for (c, a) in v.iter().enumerate() {
            amps[c * coin_stride + position] = *a;
        }
    }
    StateVector::from_amplitudes(codec.q() + 1, amps)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub max_amp_diff: f64,
    pub pass: bool,
    pub per_step_diffs: Vec<f64>,
    pub tolerance: f64,
}

/// Runs the synthesized circuit step by step and records, after every step,
/// the largest amplitude difference to the encoded reference walk.
pub fn verify(config: &SynthConfig, tolerance: f64) -> Result<VerifyReport> {
    let circuit = synth_walk(config)?;
    let codec = config.codec()?;
    let walk = trajectory(&WalkConfig::new(WalkKind::Ternary, config.coin.clone(), config.steps))?;

    let mut state = StateVector::zero(circuit.n);
    let mut per_step_diffs = Vec::with_capacity(config.steps);
    for (i, reference) in walk.iter().skip(1).enumerate() {
        apply_all(circuit.step_ops(i), &mut state)?;
        let expected = encode_walk_state(reference, &codec)?;
        per_step_diffs.push(state.max_abs_diff(&expected));
    }
    let max_amp_diff = per_step_diffs.iter().copied().fold(0.0, f64::max);
    Ok(VerifyReport {
        max_amp_diff,
        pass: max_amp_diff <= tolerance,
        per_step_diffs,
        tolerance,
    })
}
