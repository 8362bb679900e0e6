//! The ternary gate set: the five single-qutrit permutation gates, the
//! Muthukrishnan-Stroud controlled gates built from them, and the walk coins.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{unitarity_deviation, Matrix3, ONE, ZERO};
use crate::statevector::{Control, GateOp, UNITARITY_TOLERANCE};

/// Control value on which M-S gates fire.
pub const MS_TRIGGER: u8 = 2;

/// The five single-qutrit permutation gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZKind {
    /// v -> v + 1 (mod 3)
    Plus1,
    /// v -> v + 2 (mod 3)
    Plus2,
    /// swaps 0 and 1
    Swap01,
    /// swaps 1 and 2
    Swap12,
    /// swaps 0 and 2
    Swap02,
}

impl ZKind {
    pub const ALL: [ZKind; 5] =
        [ZKind::Plus1, ZKind::Plus2, ZKind::Swap01, ZKind::Swap12, ZKind::Swap02];

    /// Image of a basis digit under this gate.
    pub fn map_digit(self, v: u8) -> u8 {
        debug_assert!(v < 3);
        match self {
            ZKind::Plus1 => (v + 1) % 3,
            ZKind::Plus2 => (v + 2) % 3,
            ZKind::Swap01 => [1, 0, 2][v as usize],
            ZKind::Swap12 => [0, 2, 1][v as usize],
            ZKind::Swap02 => [2, 1, 0][v as usize],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ZKind::Plus1 => "Z+1",
            ZKind::Plus2 => "Z+2",
            ZKind::Swap01 => "Z01",
            ZKind::Swap12 => "Z12",
            ZKind::Swap02 => "Z02",
        }
    }

    pub fn from_label(label: &str) -> Option<ZKind> {
        ZKind::ALL.into_iter().find(|k| k.label() == label)
    }
}

impl fmt::Display for ZKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Permutation matrix with `M[map(v)][v] = 1`.
pub fn z_matrix(kind: ZKind) -> Matrix3 {
    let mut m = [[ZERO; 3]; 3];
    for v in 0..3u8 {
        m[kind.map_digit(v) as usize][v as usize] = ONE;
    }
    m
}

/// Two-qutrit M-S gate: apply `kind` to `target` iff `control` holds 2.
pub fn ms_gate(kind: ZKind, control: usize, target: usize) -> Result<GateOp> {
    multi_ms_gate(kind, &[control], target)
}

/// Multi-controlled M-S gate: apply `kind` to `target` iff every control holds 2.
/// An empty control list yields the bare Z gate.
pub fn multi_ms_gate(kind: ZKind, controls: &[usize], target: usize) -> Result<GateOp> {
    let controls = controls.iter().map(|&w| Control::new(w, MS_TRIGGER)).collect();
    GateOp::new(z_matrix(kind), target, controls)
}

/// Coin operators for the binary and ternary walks.
///
/// Ternary coin basis order is `0 = stay`, `1 = left`, `2 = right`. The binary
/// coin uses `0 = up` (moves to x-1) and `1 = down` (moves to x+1).
#[derive(Debug, Clone, PartialEq)]
pub enum CoinSpec {
    Dft,
    Grover,
    GRho(f64),
    Lackadaisical(f64),
    Hadamard2,
    Custom(Matrix3),
}

impl CoinSpec {
    pub fn dimension(&self) -> usize {
        match self {
            CoinSpec::Hadamard2 => 2,
            _ => 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            CoinSpec::GRho(rho) if !(rho > 0.0 && rho < 1.0) => Err(Error::InvalidRho(rho)),
            CoinSpec::Lackadaisical(l) if !(l > 0.0 && l.is_finite()) => {
                Err(Error::InvalidSelfLoop(l))
            }
            CoinSpec::Custom(ref m) => {
                let deviation = unitarity_deviation(m);
                if deviation > UNITARITY_TOLERANCE || deviation.is_nan() {
                    Err(Error::NotUnitary { deviation })
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn matrix(&self) -> Result<CoinMatrix> {
        coin_matrix(self)
    }
}

impl fmt::Display for CoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoinSpec::Dft => write!(f, "dft"),
            CoinSpec::Grover => write!(f, "grover"),
            CoinSpec::GRho(rho) => write!(f, "grho:{rho}"),
            CoinSpec::Lackadaisical(l) => write!(f, "lackadaisical:{l}"),
            CoinSpec::Hadamard2 => write!(f, "hadamard"),
            CoinSpec::Custom(_) => write!(f, "custom"),
        }
    }
}

impl FromStr for CoinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (name, param) = match lower.split_once(':') {
            Some((name, param)) => (name, Some(param)),
            None => (lower.as_str(), None),
        };
        let number = |p: Option<&str>| -> Result<f64> {
            p.and_then(|p| p.parse::<f64>().ok())
                .ok_or_else(|| Error::UnknownCoin(s.to_string()))
        };
        let spec = match name {
            "dft" if param.is_none() => CoinSpec::Dft,
            "grover" if param.is_none() => CoinSpec::Grover,
            "hadamard" if param.is_none() => CoinSpec::Hadamard2,
            "grho" => CoinSpec::GRho(number(param)?),
            "lackadaisical" => CoinSpec::Lackadaisical(number(param)?),
            _ => return Err(Error::UnknownCoin(s.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A dense `d x d` coin unitary, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl CoinMatrix {
    fn from_rows<const D: usize>(rows: [[Complex64; D]; D]) -> Self {
        CoinMatrix { dim: D, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries.chunks(self.dim).map(<[Complex64]>::to_vec).collect()
    }

    /// `C v` for a coin vector `v` of matching length.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(v.len(), self.dim);
        self.entries
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn as_matrix3(&self) -> Option<Matrix3> {
        (self.dim == 3).then(|| {
            let mut m = [[ZERO; 3]; 3];
            for (i, row) in m.iter_mut().enumerate() {
                row.copy_from_slice(&self.entries[3 * i..3 * i + 3]);
            }
            m
        })
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn coin_matrix(spec: &CoinSpec) -> Result<CoinMatrix> {
    spec.validate()?;
    let m = match *spec {
        CoinSpec::Dft => {
            let scale = 1.0 / 3f64.sqrt();
            let mut rows = [[ZERO; 3]; 3];
            for (j, row) in rows.iter_mut().enumerate() {
                for (k, entry) in row.iter_mut().enumerate() {
                    // exponent reduced mod 3 so equal phases are bit-identical
                    let phase = 2.0 * PI * ((j * k) % 3) as f64 / 3.0;
                    *entry = Complex64::from_polar(scale, phase);
                }
            }
            CoinMatrix::from_rows(rows)
        }
        CoinSpec::Grover => {
            let d = real(-1.0 / 3.0);
            let o = real(2.0 / 3.0);
            CoinMatrix::from_rows([[d, o, o], [o, d, o], [o, o, d]])
        }
        CoinSpec::GRho(rho) => {
            let r2 = rho * rho;
            let cross = real(rho * (2.0 - 2.0 * r2).sqrt());
            let corner = real(-r2);
            let anti = real(1.0 - r2);
            let centre = real(2.0 * r2 - 1.0);
            CoinMatrix::from_rows([
                [corner, cross, anti],
                [cross, centre, cross],
                [anti, cross, corner],
            ])
        }
        CoinSpec::Lackadaisical(l) => {
            let norm = (2.0 + l).sqrt();
            let s = [l.sqrt() / norm, 1.0 / norm, 1.0 / norm];
            let mut rows = [[ZERO; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    let delta = if i == j { 1.0 } else { 0.0 };
                    rows[i][j] = real(2.0 * s[i] * s[j] - delta);
                }
            }
            CoinMatrix::from_rows(rows)
        }
        CoinSpec::Hadamard2 => {
            let h = real(std::f64::consts::FRAC_1_SQRT_2);
            CoinMatrix::from_rows([[h, h], [h, -h]])
        }
        CoinSpec::Custom(m) => CoinMatrix::from_rows(m),
    };
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{identity3, max_diff3, mul3};
    use crate::statevector::StateVector;

    fn run(gate: &GateOp, n: usize, input: &str) -> StateVector {
        StateVector::basis(n, input).unwrap().applied(gate).unwrap()
    }

    #[test]
    fn z_truth_table() {
        // columns of the 1-qutrit truth table, inputs 0, 1, 2
        let expected = [
            (ZKind::Plus1, [1, 2, 0]),
            (ZKind::Plus2, [2, 0, 1]),
            (ZKind::Swap01, [1, 0, 2]),
            (ZKind::Swap12, [0, 2, 1]),
            (ZKind::Swap02, [2, 1, 0]),
        ];
        for (kind, images) in expected {
            let m = z_matrix(kind);
            for (v, &img) in images.iter().enumerate() {
                assert_eq!(m[img][v], ONE, "{kind} on {v}");
            }
        }
    }

    #[test]
    fn z_printed_matrices() {
        let o = ONE;
        let z = ZERO;
        assert_eq!(z_matrix(ZKind::Plus1), [[z, z, o], [o, z, z], [z, o, z]]);
        assert_eq!(z_matrix(ZKind::Plus2), [[z, o, z], [z, z, o], [o, z, z]]);
        assert_eq!(z_matrix(ZKind::Swap02), [[z, z, o], [z, o, z], [o, z, z]]);
    }

    #[test]
    fn z_algebra() {
        let p1 = z_matrix(ZKind::Plus1);
        assert_eq!(mul3(&p1, &mul3(&p1, &p1)), identity3());
        assert_eq!(mul3(&p1, &p1), z_matrix(ZKind::Plus2));
        for k in [ZKind::Swap01, ZKind::Swap12, ZKind::Swap02] {
            assert_eq!(mul3(&z_matrix(k), &z_matrix(k)), identity3());
        }
    }

    #[test]
    fn ms_truth_table() {
        // full two-qutrit M-S truth table, outputs of B per kind
        let outputs: [(u8, u8, [u8; 5]); 9] = [
            (0, 0, [0, 0, 0, 0, 0]),
            (0, 1, [1, 1, 1, 1, 1]),
            (0, 2, [2, 2, 2, 2, 2]),
            (1, 0, [0, 0, 0, 0, 0]),
            (1, 1, [1, 1, 1, 1, 1]),
            (1, 2, [2, 2, 2, 2, 2]),
            (2, 0, [1, 2, 1, 0, 2]),
            (2, 1, [2, 0, 0, 2, 1]),
            (2, 2, [0, 1, 2, 1, 0]),
        ];
        for (a, b, outs) in outputs {
            for (kind, out) in ZKind::ALL.into_iter().zip(outs) {
                let g = ms_gate(kind, 0, 1).unwrap();
                let got = run(&g, 2, &format!("{a}{b}"));
                assert_eq!(got, StateVector::basis(2, &format!("{a}{out}")).unwrap());
            }
        }
    }

    #[test]
    fn ms_examples() {
        assert_eq!(run(&ms_gate(ZKind::Plus2, 0, 1).unwrap(), 2, "21"), run_id(2, "20"));
        assert_eq!(run(&ms_gate(ZKind::Swap01, 0, 1).unwrap(), 2, "12"), run_id(2, "12"));
        assert_eq!(run(&ms_gate(ZKind::Swap02, 0, 1).unwrap(), 2, "22"), run_id(2, "20"));
        assert_eq!(ms_gate(ZKind::Plus1, 1, 1), Err(Error::DuplicateWire(1)));
    }

    fn run_id(n: usize, s: &str) -> StateVector {
        StateVector::basis(n, s).unwrap()
    }

    #[test]
    fn multi_ms_examples() {
        let g = multi_ms_gate(ZKind::Plus1, &[0, 1], 2).unwrap();
        assert_eq!(run(&g, 3, "220"), run_id(3, "221"));
        assert_eq!(run(&g, 3, "120"), run_id(3, "120"));
        let bare = multi_ms_gate(ZKind::Swap12, &[], 0).unwrap();
        assert_eq!(run(&bare, 1, "1"), run_id(1, "2"));
        assert_eq!(multi_ms_gate(ZKind::Plus1, &[0, 0], 2), Err(Error::DuplicateWire(0)));
        assert_eq!(multi_ms_gate(ZKind::Plus1, &[0, 2], 2), Err(Error::DuplicateWire(2)));
    }

    #[test]
    fn grover_entries() {
        let g = coin_matrix(&CoinSpec::Grover).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { -1.0 / 3.0 } else { 2.0 / 3.0 };
                assert!((g.get(i, j) - real(want)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn grho_reduces_to_grover() {
        let g = coin_matrix(&CoinSpec::Grover).unwrap().as_matrix3().unwrap();
        let r = coin_matrix(&CoinSpec::GRho((1.0f64 / 3.0).sqrt())).unwrap().as_matrix3().unwrap();
        assert!(max_diff3(&g, &r) <= 1e-12);
    }

    #[test]
    fn dft_on_zero_is_uniform() {
        let c = coin_matrix(&CoinSpec::Dft).unwrap();
        let out = c.apply(&[ONE, ZERO, ZERO]);
        for a in out {
            assert!((a - real(1.0 / 3f64.sqrt())).norm() < 1e-15);
        }
        let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        assert!((c.get(1, 1) * 3f64.sqrt() - w).norm() < 1e-15);
        assert!((c.get(1, 2) * 3f64.sqrt() - w * w).norm() < 1e-15);
        assert!((c.get(2, 2) * 3f64.sqrt() - w).norm() < 1e-15);
    }

    #[test]
    fn lackadaisical_two() {
        // s = (sqrt2, 1, 1)/2 in (stay, left, right) order; D = 2 s s^T - I
        let d = coin_matrix(&CoinSpec::Lackadaisical(2.0)).unwrap().as_matrix3().unwrap();
        let s = [2f64.sqrt() / 2.0, 0.5, 0.5];
        for i in 0..3 {
            for j in 0..3 {
                let want = 2.0 * s[i] * s[j] - if i == j { 1.0 } else { 0.0 };
                assert!((d[i][j] - real(want)).norm() < 1e-15);
            }
        }
        assert!(max_diff3(&mul3(&d, &d), &identity3()) <= 1e-12);
    }

    #[test]
    fn parameter_validation() {
        assert_eq!(coin_matrix(&CoinSpec::GRho(0.0)), Err(Error::InvalidRho(0.0)));
        assert_eq!(coin_matrix(&CoinSpec::GRho(1.0)), Err(Error::InvalidRho(1.0)));
        assert_eq!(
            coin_matrix(&CoinSpec::Lackadaisical(-1.0)),
            Err(Error::InvalidSelfLoop(-1.0))
        );
        let mut bad = identity3();
        bad[1][0] = ONE;
        assert!(matches!(coin_matrix(&CoinSpec::Custom(bad)), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn parse_coins() {
        assert_eq!("dft".parse::<CoinSpec>().unwrap(), CoinSpec::Dft);
        assert_eq!("Grover".parse::<CoinSpec>().unwrap(), CoinSpec::Grover);
        assert_eq!("grho:0.5".parse::<CoinSpec>().unwrap(), CoinSpec::GRho(0.5));
        assert_eq!("lackadaisical:2".parse::<CoinSpec>().unwrap(), CoinSpec::Lackadaisical(2.0));
        assert_eq!("hadamard".parse::<CoinSpec>().unwrap(), CoinSpec::Hadamard2);
        assert!("grho".parse::<CoinSpec>().is_err());
        assert_eq!("grho:1.5".parse::<CoinSpec>(), Err(Error::InvalidRho(1.5)));
        assert!("pauli".parse::<CoinSpec>().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(CoinSpec::Hadamard2.dimension(), 2);
        assert_eq!(coin_matrix(&CoinSpec::Hadamard2).unwrap().dim(), 2);
        assert_eq!(CoinSpec::Dft.dimension(), 3);
        assert!(coin_matrix(&CoinSpec::Hadamard2).unwrap().as_matrix3().is_none());
    }
}
