//! Dense state vectors over n-qutrit registers.
//!
//! Wire 0 is the leftmost ket factor and the most significant trit of the flat
//! index: for `|t_0 t_1 ... t_{n-1}>` the index is `sum_w t_w * 3^(n-1-w)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{dagger3, unitarity_deviation, Matrix3, ONE, ZERO};

/// Per-entry tolerance for `U^dag U = I` when a gate is constructed.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

pub fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

/// Parses a digit string such as `"0120"` into trits.
pub fn parse_trits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .enumerate()
        .map(|(position, c)| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            '2' => Ok(2),
            digit => Err(Error::InvalidDigit { position, digit }),
        })
        .collect()
}

pub fn format_trits(trits: &[u8]) -> String {
    trits.iter().map(|&t| char::from(b'0' + t)).collect()
}

/// Flat index of a trit string, first trit most significant.
pub fn flat_index(trits: &[u8]) -> usize {
    trits.iter().fold(0, |acc, &t| acc * 3 + t as usize)
}

/// Inverse of [`flat_index`] for a register of `n` trits.
pub fn index_trits(mut index: usize, n: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    for slot in out.iter_mut().rev() {
        *slot = (index % 3) as u8;
        index /= 3;
    }
    out
}

/// A `(wire, value)` condition: the gate fires only when the wire holds `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Control {
    pub wire: usize,
    pub value: u8,
}

impl Control {
    pub fn new(wire: usize, value: u8) -> Self {
        Control { wire, value }
    }
}

/// A single-qutrit unitary on `target`, conditioned on every control matching.
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    unitary: Matrix3,
    target: usize,
    controls: Vec<Control>,
}

impl GateOp {
    pub fn new(unitary: Matrix3, target: usize, controls: Vec<Control>) -> Result<Self> {
        for (i, c) in controls.iter().enumerate() {
            if c.value > 2 {
                return Err(Error::InvalidControlValue(c.value));
            }
            if c.wire == target || controls[..i].iter().any(|o| o.wire == c.wire) {
                return Err(Error::DuplicateWire(c.wire));
            }
        }
        let deviation = unitarity_deviation(&unitary);
        if deviation > UNITARITY_TOLERANCE || deviation.is_nan() {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(GateOp { unitary, target, controls })
    }

    pub fn single(unitary: Matrix3, target: usize) -> Result<Self> {
        Self::new(unitary, target, Vec::new())
    }

    pub fn unitary(&self) -> &Matrix3 {
        &self.unitary
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn controls(&self) -> &[Control] {
        &self.controls
    }

    /// The inverse gate: same wires, conjugate-transposed unitary.
    pub fn inverse(&self) -> GateOp {
        GateOp {
            unitary: dagger3(&self.unitary),
            target: self.target,
            controls: self.controls.clone(),
        }
    }

    /// Largest wire index referenced by this gate.
    pub fn max_wire(&self) -> usize {
        self.controls.iter().map(|c| c.wire).fold(self.target, usize::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0>` on `n` qutrits.
    pub fn zero(n: usize) -> Self {
        let mut amps = vec![ZERO; pow3(n)];
        amps[0] = ONE;
        StateVector { n, amps }
    }

    /// Computational basis state named by a digit string of length `n`.
    pub fn basis(n: usize, trits: &str) -> Result<Self> {
        let digits = parse_trits(trits)?;
        if digits.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: digits.len() });
        }
        let mut amps = vec![ZERO; pow3(n)];
        amps[flat_index(&digits)] = ONE;
        Ok(StateVector { n, amps })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        let expected = pow3(n);
        if amps.len() != expected {
            return Err(Error::DimensionMismatch { n, expected, actual: amps.len() });
        }
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn amplitude(&self, trits: &[u8]) -> Complex64 {
        self.amps[flat_index(trits)]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|amp_i|^2` for every basis index.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Applies `gate` in place.
    ///
    /// The register is walked in blocks of `3 * stride` where `stride` is the
    /// target's place value; each block yields `stride` amplitude triples that
    /// differ only in the target digit.
    pub fn apply(&mut self, gate: &GateOp) -> Result<()> {
        if gate.max_wire() >= self.n {
            return Err(Error::WireOutOfRange { wire: gate.max_wire(), n: self.n });
        }
        let strides: Vec<(usize, usize)> = gate
            .controls
            .iter()
            .map(|c| (pow3(self.n - 1 - c.wire), c.value as usize))
            .collect();
        let stride = pow3(self.n - 1 - gate.target);
        let u = &gate.unitary;
        let block = 3 * stride;

        for start in (0..self.amps.len()).step_by(block) {
            for base in start..start + stride {
                if !strides.iter().all(|&(s, v)| (base / s) % 3 == v) {
                    continue;
                }
                let a0 = self.amps[base];
                let a1 = self.amps[base + stride];
                let a2 = self.amps[base + 2 * stride];
                self.amps[base] = u[0][0] * a0 + u[0][1] * a1 + u[0][2] * a2;
                self.amps[base + stride] = u[1][0] * a0 + u[1][1] * a1 + u[1][2] * a2;
                self.amps[base + 2 * stride] = u[2][0] * a0 + u[2][1] * a1 + u[2][2] * a2;
            }
        }
        Ok(())
    }

    /// Non-mutating form of [`StateVector::apply`].
    pub fn applied(&self, gate: &GateOp) -> Result<Self> {
        let mut out = self.clone();
        out.apply(gate)?;
        Ok(out)
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Convenience: the probability vector of a state.
pub fn probabilities(state: &StateVector) -> Vec<f64> {
    state.probabilities()
}
