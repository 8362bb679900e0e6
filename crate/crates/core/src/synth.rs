//! Ternary circuits for the lazy walk on a `(q + 1)`-qutrit register.
//!
//! Wire 0 holds the coin; position trit `k` (k = 0 least significant) sits on
//! wire `q - k`. Each walk step is the coin unitary on wire 0 followed by two
//! carry cascades of multi-controlled M-S gates: the right move conditioned on
//! coin 2 and the left move conditioned on coin 1. Conditions on the value 1
//! are turned into M-S triggers by wrapping the affected wires in `Z12`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::codec::{Cascade, PositionCodec, Variant};
use crate::error::{Error, Result};
use crate::gates::{multi_ms_gate, CoinSpec, ZKind};
use crate::statevector::{pow3, GateOp, StateVector};

/// Which gates a step emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// Gates for position trit `k` appear from step `(3^k + 1) / 2` onward,
    /// when the walker can first carry into that trit.
    Incremental,
    /// Every step carries the full cascade over all `q` trits.
    Full,
}

impl FromStr for Schedule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "incremental" => Ok(Schedule::Incremental),
            "full" => Ok(Schedule::Full),
            other => Err(format!("unknown schedule {other:?}; expected incremental or full")),
        }
    }
}

/// First step at which a gate targeting position trit `k` is needed.
pub fn stage_threshold(k: usize) -> usize {
    pow3(k).div_ceil(2)
}

/// `floor(3^q / 2)`: the number of steps a `q`-trit position register supports.
pub fn capacity(q: usize) -> usize {
    pow3(q) / 2
}

/// Number of low position trits whose gates are emitted at `step_index`.
pub fn active_trits(q: usize, step_index: usize, schedule: Schedule) -> usize {
    match schedule {
        Schedule::Full => q,
        Schedule::Incremental => (0..q).take_while(|&k| step_index >= stage_threshold(k)).count(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub q: usize,
    pub steps: usize,
    pub coin: CoinSpec,
    pub variant: Variant,
    pub schedule: Schedule,
}

impl SynthConfig {
    pub fn new(q: usize, steps: usize, coin: CoinSpec) -> Self {
        SynthConfig { q, steps, coin, variant: Variant::Primary, schedule: Schedule::Incremental }
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_schedule(mut self, schedule: Schedule) -> Self {
        self.schedule = schedule;
        self
    }

    pub fn capacity(&self) -> usize {
        capacity(self.q)
    }

    pub fn codec(&self) -> Result<PositionCodec> {
        PositionCodec::new(self.q, self.variant)
    }

    pub fn validate(&self) -> Result<()> {
        self.codec()?;
        if self.steps > self.capacity() {
            return Err(Error::CapacityExceeded {
                q: self.q,
                steps: self.steps,
                capacity: self.capacity(),
            });
        }
        self.coin.validate()?;
        if self.coin.dimension() != 3 {
            return Err(Error::CoinDimension { coin: self.coin.dimension(), walk: 3 });
        }
        Ok(())
    }
}

/// Gate family of a circuit instruction, as named in netlists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Z(ZKind),
    Coin,
    Custom,
}

impl GateKind {
    pub fn label(self) -> &'static str {
        match self {
            GateKind::Z(k) => k.label(),
            GateKind::Coin => "COIN",
            GateKind::Custom => "CUSTOM",
        }
    }

    pub fn from_label(label: &str) -> Option<GateKind> {
        match label {
            "COIN" => Some(GateKind::Coin),
            "CUSTOM" => Some(GateKind::Custom),
            other => ZKind::from_label(other).map(GateKind::Z),
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A gate together with the family it was drawn from.
#[derive(Debug, Clone, PartialEq)]
pub struct Instruction {
    pub kind: GateKind,
    pub gate: GateOp,
}

impl Instruction {
    fn z(kind: ZKind, controls: &[usize], target: usize) -> Result<Self> {
        Ok(Instruction { kind: GateKind::Z(kind), gate: multi_ms_gate(kind, controls, target)? })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub n: usize,
    pub coin: CoinSpec,
    pub ops: Vec<Instruction>,
    /// Index of the first op of each walk step.
    pub step_markers: Vec<usize>,
}

impl Circuit {
    pub fn steps(&self) -> usize {
        self.step_markers.len()
    }

    /// Ops belonging to step `index` (0-based).
    pub fn step_ops(&self, index: usize) -> &[Instruction] {
        let start = self.step_markers[index];
        let end = self.step_markers.get(index + 1).copied().unwrap_or(self.ops.len());
        &self.ops[start..end]
    }

    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        apply_all(&self.ops, state)
    }

    /// Runs the circuit on `|0...0>`.
    pub fn simulate(&self) -> Result<StateVector> {
        let mut state = StateVector::zero(self.n);
        self.apply_to(&mut state)?;
        Ok(state)
    }
}

pub fn apply_all(ops: &[Instruction], state: &mut StateVector) -> Result<()> {
    ops.iter().try_for_each(|op| state.apply(&op.gate))
}

fn position_wire(q: usize, k: usize) -> usize {
    q - k
}

/// Emits the cascade `cascade` over the `active` low trits, conditioned on the
/// coin wire holding `coin_value`.
fn emit_cascade(
    ops: &mut Vec<Instruction>,
    q: usize,
    active: usize,
    coin_value: u8,
    cascade: Cascade,
) -> Result<()> {
    if active == 0 {
        return Ok(());
    }
    let wrap_coin = coin_value != 2;
    let wrap_carries = cascade.carry_digit() != 2;
    debug_assert!(coin_value == 1 || coin_value == 2);
    debug_assert!(cascade.carry_digit() == 1 || cascade.carry_digit() == 2);

    if wrap_coin {
        ops.push(Instruction::z(ZKind::Swap12, &[], 0)?);
    }
    if wrap_carries {
        for k in 0..active - 1 {
            ops.push(Instruction::z(ZKind::Swap12, &[], position_wire(q, k))?);
        }
    }
    // most significant first, so the carry controls still hold pre-move digits
    for k in (0..active).rev() {
        if wrap_carries && k + 1 < active {
            ops.push(Instruction::z(ZKind::Swap12, &[], position_wire(q, k))?);
        }
        let mut controls = vec![0];
        controls.extend((0..k).rev().map(|j| position_wire(q, j)));
        ops.push(Instruction::z(cascade.digit_gate(), &controls, position_wire(q, k))?);
    }
    if wrap_coin {
        ops.push(Instruction::z(ZKind::Swap12, &[], 0)?);
    }
    Ok(())
}

/// Ops for walk step `step_index` (1-based).
pub fn synth_step(config: &SynthConfig, step_index: usize) -> Result<Vec<Instruction>> {
    config.validate()?;
    if step_index == 0 || step_index > config.steps {
        return Err(Error::StepOutOfRange { index: step_index, steps: config.steps });
    }
    step_ops(config, step_index)
}

fn step_ops(config: &SynthConfig, step_index: usize) -> Result<Vec<Instruction>> {
    let codec = config.codec()?;
    let coin = config
        .coin
        .matrix()?
        .as_matrix3()
        .ok_or(Error::CoinDimension { coin: config.coin.dimension(), walk: 3 })?;
    let active = active_trits(config.q, step_index, config.schedule);

    let mut ops = vec![Instruction { kind: GateKind::Coin, gate: GateOp::single(coin, 0)? }];
    emit_cascade(&mut ops, config.q, active, 2, codec.right_cascade())?;
    emit_cascade(&mut ops, config.q, active, 1, codec.left_cascade())?;
    Ok(ops)
}

/// The whole walk: steps `1..=config.steps`, meant to run from `|0>|0...0>`.
pub fn synth_walk(config: &SynthConfig) -> Result<Circuit> {
    config.validate()?;
    let mut ops = Vec::new();
    let mut step_markers = Vec::with_capacity(config.steps);
    for step in 1..=config.steps {
        step_markers.push(ops.len());
        ops.extend(step_ops(config, step)?);
    }
    Ok(Circuit { n: config.q + 1, coin: config.coin.clone(), ops, step_markers })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateReport {
    pub total_ops: usize,
    pub per_step_ops: Vec<usize>,
    pub max_controls: usize,
    pub counts_by_kind: BTreeMap<String, usize>,
}

pub fn gate_report(circuit: &Circuit) -> GateReport {
    let per_step_ops = (0..circuit.steps()).map(|i| circuit.step_ops(i).len()).collect();
    let mut counts_by_kind = BTreeMap::new();
    for op in &circuit.ops {
        let label = if op.gate.controls().is_empty() {
            op.kind.label().to_string()
        } else {
            format!("M-S {}", op.kind.label())
        };
        *counts_by_kind.entry(label).or_insert(0) += 1;
    }
    GateReport {
        total_ops: circuit.ops.len(),
        per_step_ops,
        max_controls: circuit.ops.iter().map(|op| op.gate.controls().len()).max().unwrap_or(0),
        counts_by_kind,
    }
}
