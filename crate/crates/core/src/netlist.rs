//! JSON netlists for synthesized circuits.
//!
//! ```json
//! {
//!   "n": 2,
//!   "coin": { "tag": "DFT" },
//!   "ops": [
//!     { "kind": "COIN", "target": 0, "controls": [] },
//!     { "kind": "Z+2", "target": 1, "controls": [ { "wire": 0, "value": 2 } ] }
//!   ],
//!   "step_markers": [0]
//! }
//! ```
//!
//! `CUSTOM` ops carry a `matrix` of 3 rows of 3 `[re, im]` pairs. `COIN` ops
//! take their matrix from the top-level `coin`. Load errors name the offending
//! field with a JSON pointer.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gates::{z_matrix, CoinSpec};
use crate::matrix::Matrix3;
use crate::statevector::{Control, GateOp};
use crate::synth::{Circuit, GateKind, Instruction};

/// Registers above this size are refused when loading (3^16 amplitudes).
pub const MAX_NETLIST_QUTRITS: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{pointer}: {message}")]
pub struct NetlistError {
    /// JSON pointer to the offending value; empty for the document root.
    pub pointer: String,
    pub message: String,
}

impl NetlistError {
    fn at(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        NetlistError { pointer: pointer.into(), message: message.into() }
    }
}

type MatrixDoc = [[[f64; 2]; 3]; 3];

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "tag")]
enum CoinDoc {
    #[serde(rename = "DFT")]
    Dft,
    Grover,
    GRho {
        rho: f64,
    },
    Lackadaisical {
        l: f64,
    },
    Hadamard2,
    Custom {
        matrix: MatrixDoc,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct ControlDoc {
    wire: usize,
    value: u8,
}

#[derive(Debug, Serialize, Deserialize)]
struct OpDoc {
    kind: String,
    target: usize,
    #[serde(default)]
    controls: Vec<ControlDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<MatrixDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
struct NetlistDoc {
    n: usize,
    coin: CoinDoc,
    ops: Vec<OpDoc>,
    #[serde(default)]
    step_markers: Vec<usize>,
}

fn matrix_to_doc(m: &Matrix3) -> MatrixDoc {
    m.map(|row| row.map(|z| [z.re, z.im]))
}

fn matrix_from_doc(m: &MatrixDoc) -> Matrix3 {
    m.map(|row| row.map(|[re, im]| Complex64::new(re, im)))
}

fn coin_to_doc(coin: &CoinSpec) -> CoinDoc {
    match *coin {
        CoinSpec::Dft => CoinDoc::Dft,
        CoinSpec::Grover => CoinDoc::Grover,
        CoinSpec::GRho(rho) => CoinDoc::GRho { rho },
        CoinSpec::Lackadaisical(l) => CoinDoc::Lackadaisical { l },
        CoinSpec::Hadamard2 => CoinDoc::Hadamard2,
        CoinSpec::Custom(ref m) => CoinDoc::Custom { matrix: matrix_to_doc(m) },
    }
}

fn coin_from_doc(doc: &CoinDoc) -> CoinSpec {
    match *doc {
        CoinDoc::Dft => CoinSpec::Dft,
        CoinDoc::Grover => CoinSpec::Grover,
        CoinDoc::GRho { rho } => CoinSpec::GRho(rho),
        CoinDoc::Lackadaisical { l } => CoinSpec::Lackadaisical(l),
        CoinDoc::Hadamard2 => CoinSpec::Hadamard2,
        CoinDoc::Custom { ref matrix } => CoinSpec::Custom(matrix_from_doc(matrix)),
    }
}

fn to_doc(circuit: &Circuit) -> NetlistDoc {
    let ops = circuit
        .ops
        .iter()
        .map(|op| OpDoc {
            kind: op.kind.label().to_string(),
            target: op.gate.target(),
            controls: op
                .gate
                .controls()
                .iter()
                .map(|c| ControlDoc { wire: c.wire, value: c.value })
                .collect(),
            matrix: (op.kind == GateKind::Custom).then(|| matrix_to_doc(op.gate.unitary())),
        })
        .collect();
    NetlistDoc {
        n: circuit.n,
        coin: coin_to_doc(&circuit.coin),
        ops,
        step_markers: circuit.step_markers.clone(),
    }
}

/// Serializes a circuit as pretty-printed JSON with a trailing newline.
pub fn to_json(circuit: &Circuit) -> String {
    let mut out = serde_json::to_string_pretty(&to_doc(circuit)).expect("netlist serializes");
    out.push('\n');
    out
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    path.iter()
        .filter_map(|seg| match seg {
            Segment::Seq { index } => Some(format!("/{index}")),
            Segment::Map { key } => Some(format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { .. } | Segment::Unknown => None,
        })
        .collect()
}

/// Parses and validates a netlist.
pub fn from_json(text: &str) -> Result<Circuit, NetlistError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: NetlistDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = pointer_of(e.path());
        NetlistError::at(pointer, e.into_inner().to_string())
    })?;
    from_doc(doc)
}

fn from_doc(doc: NetlistDoc) -> Result<Circuit, NetlistError> {
    let n = doc.n;
    if n == 0 || n > MAX_NETLIST_QUTRITS {
        return Err(NetlistError::at(
            "/n",
            format!("register size must be in 1..={MAX_NETLIST_QUTRITS}"),
        ));
    }
    let coin = coin_from_doc(&doc.coin);
    coin.validate().map_err(|e| NetlistError::at("/coin", e.to_string()))?;
    let coin_unitary = coin.matrix().ok().and_then(|m| m.as_matrix3());

    let mut ops = Vec::with_capacity(doc.ops.len());
    for (i, op) in doc.ops.iter().enumerate() {
        let here = format!("/ops/{i}");
        let kind = GateKind::from_label(&op.kind)
            .ok_or_else(|| NetlistError::at(format!("{here}/kind"), format!("unknown gate kind {:?}", op.kind)))?;
        if op.matrix.is_some() && kind != GateKind::Custom {
            return Err(NetlistError::at(format!("{here}/matrix"), "only CUSTOM ops carry a matrix"));
        }
        let unitary = match kind {
            GateKind::Z(z) => z_matrix(z),
            GateKind::Coin => coin_unitary.ok_or_else(|| {
                NetlistError::at(format!("{here}/kind"), "COIN op needs a three-state coin")
            })?,
            GateKind::Custom => op
                .matrix
                .as_ref()
                .map(matrix_from_doc)
                .ok_or_else(|| NetlistError::at(format!("{here}/matrix"), "CUSTOM op needs a matrix"))?,
        };
        if op.target >= n {
            return Err(NetlistError::at(format!("{here}/target"), format!("wire {} out of range for n = {n}", op.target)));
        }
        let mut controls = Vec::with_capacity(op.controls.len());
        for (j, c) in op.controls.iter().enumerate() {
            let at = format!("{here}/controls/{j}");
            if c.wire >= n {
                return Err(NetlistError::at(format!("{at}/wire"), format!("wire {} out of range for n = {n}", c.wire)));
            }
            if c.wire == op.target || controls.iter().any(|o: &Control| o.wire == c.wire) {
                return Err(NetlistError::at(format!("{at}/wire"), format!("wire {} used twice", c.wire)));
            }
            if c.value > 2 {
                return Err(NetlistError::at(format!("{at}/value"), format!("control value {} is not a trit", c.value)));
            }
            controls.push(Control::new(c.wire, c.value));
        }
        let gate = GateOp::new(unitary, op.target, controls).map_err(|e| {
            let field = if kind == GateKind::Custom { "matrix" } else { "kind" };
            NetlistError::at(format!("{here}/{field}"), e.to_string())
        })?;
        ops.push(Instruction { kind, gate });
    }

    let mut previous = 0;
    for (k, &m) in doc.step_markers.iter().enumerate() {
        if m > ops.len() || m < previous || (k == 0 && m != 0) {
            return Err(NetlistError::at(
                format!("/step_markers/{k}"),
                "step markers must start at 0 and be non-decreasing op indices",
            ));
        }
        previous = m;
    }
    Ok(Circuit { n, coin, ops, step_markers: doc.step_markers })
}
