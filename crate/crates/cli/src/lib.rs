//! Command implementations for the `qutrit-walk` binary.
//!
//! Each command renders its full output as a string so the binary, the tests
//! and any embedding program share one formatting path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use qutrit_walk::gates::{coin_matrix, z_matrix};
use qutrit_walk::matrix::Matrix3;
use qutrit_walk::netlist::{self, NetlistError};
use qutrit_walk::statevector::{format_trits, index_trits};
use qutrit_walk::verify::{verify, VerifyReport, DEFAULT_TOLERANCE};
use qutrit_walk::{
    evolve, synth_walk, Circuit, CoinSpec, InitialCoin, PositionCodec, Schedule, SynthConfig,
    Variant, WalkConfig, WalkKind, ZKind,
};

/// Largest position register the CLI accepts.
pub const MAX_Q: usize = 12;

/// Probabilities at or below this are left out of `simulate` output.
pub const SIMULATE_CUTOFF: f64 = 1e-15;

#[derive(Debug, Parser)]
#[command(name = "qutrit-walk", version, about = "Lazy quantum walks and their ternary circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve a walk on the line and print its position distribution as CSV.
    Walk(WalkArgs),
    /// Synthesize the lazy-walk circuit and print it as a JSON netlist.
    Synth(SynthArgs),
    /// Run a netlist on |0...0> and print basis-state probabilities as CSV.
    Simulate(SimulateArgs),
    /// Compare the synthesized circuit against the reference walk.
    Verify(VerifyArgs),
    /// Print the position encoding as CSV.
    Codec(CodecArgs),
    /// Print gate and coin matrices as JSON.
    Gates(GatesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Binary,
    Ternary,
}

impl From<KindArg> for WalkKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Binary => WalkKind::Binary,
            KindArg::Ternary => WalkKind::Ternary,
        }
    }
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[arg(long, value_enum, default_value = "ternary")]
    pub kind: KindArg,
    /// dft, grover, grho:<rho>, lackadaisical:<l> or hadamard (default: dft for
    /// ternary, hadamard for binary)
    #[arg(long)]
    pub coin: Option<CoinSpec>,
    #[arg(long, default_value_t = 0)]
    pub steps: usize,
    /// Initial coin basis state.
    #[arg(long, default_value_t = 0)]
    pub initial_coin: usize,
    /// Output file; `-` or `stdout` for standard output.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct CircuitArgs {
    /// Number of position trits.
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, default_value = "dft")]
    pub coin: CoinSpec,
    #[arg(long, default_value = "primary")]
    pub variant: Variant,
    #[arg(long, default_value = "incremental")]
    pub schedule: Schedule,
}

impl CircuitArgs {
    pub fn config(&self) -> Result<SynthConfig, CliError> {
        if self.q == 0 || self.q > MAX_Q {
            return Err(CliError::Validation(format!("--q must be in 1..={MAX_Q}")));
        }
        let config = SynthConfig::new(self.q, self.steps, self.coin.clone())
            .with_variant(self.variant)
            .with_schedule(self.schedule);
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub netlist: PathBuf,
    /// Only exact readout (`none`) is supported.
    #[arg(long, default_value = "none")]
    pub shots: String,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub circuit: CircuitArgs,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct CodecArgs {
    /// Optional `dump` action; dumping the table is the only action.
    #[arg(value_parser = ["dump"])]
    pub action: Option<String>,
    #[arg(long)]
    pub q: usize,
    #[arg(long, default_value = "primary")]
    pub variant: Variant,
}

#[derive(Debug, Args)]
pub struct GatesArgs {
    /// List every gate and coin matrix (the default).
    #[arg(long)]
    pub list: bool,
    /// Print a single Z gate (`Z+1`, `Z+2`, `Z01`, `Z12`, `Z02`).
    #[arg(long, conflicts_with = "list")]
    pub kind: Option<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] qutrit_walk::Error),
    #[error("malformed netlist at {0}")]
    Netlist(#[from] NetlistError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Text to emit and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub destination: Option<String>,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

fn success(text: String, destination: Option<String>) -> Output {
    let destination = destination.filter(|d| d != "-" && d != "stdout");
    Output { text, destination, code: EXIT_OK }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Walk(args) => {
            let kind = WalkKind::from(args.kind);
            let coin = args.coin.unwrap_or(match kind {
                WalkKind::Binary => CoinSpec::Hadamard2,
                WalkKind::Ternary => CoinSpec::Dft,
            });
            let mut config = WalkConfig::new(kind, coin, args.steps);
            config.initial_coin = InitialCoin::Basis(args.initial_coin);
            Ok(success(walk_csv(&config)?, args.out))
        }
        Command::Synth(args) => {
            let circuit = synth_walk(&args.circuit.config()?)?;
            Ok(success(netlist::to_json(&circuit), args.out))
        }
        Command::Simulate(args) => {
            if args.shots != "none" {
                return Err(CliError::Validation(
                    "only --shots none (exact probabilities) is supported".into(),
                ));
            }
            let path = args.netlist.display().to_string();
            let text = std::fs::read_to_string(&args.netlist)
                .map_err(|source| CliError::Io { path, source })?;
            let circuit = netlist::from_json(&text)?;
            Ok(success(simulate_csv(&circuit)?, args.out))
        }
        Command::Verify(args) => {
            if args.tolerance.is_nan() || args.tolerance < 0.0 {
                return Err(CliError::Validation("--tolerance must be non-negative".into()));
            }
            let report = verify(&args.circuit.config()?, args.tolerance)?;
            let code = if report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok(Output { text: report_json(&report), destination: None, code })
        }
        Command::Codec(args) => {
            if args.q > MAX_Q {
                return Err(CliError::Validation(format!("--q must be in 1..={MAX_Q}")));
            }
            let codec = PositionCodec::new(args.q, args.variant)?;
            Ok(success(codec_csv(&codec), None))
        }
        Command::Gates(args) => Ok(success(gates_json(args.kind.as_deref())?, None)),
    }
}

/// `x,probability` rows for every x in `-steps..=steps`.
pub fn walk_csv(config: &WalkConfig) -> Result<String, CliError> {
    let state = evolve(config)?;
    let t = config.steps as i64;
    let mut out = String::from("x,probability\n");
    for (x, p) in state.distribution_over(-t, t) {
        writeln!(out, "{x},{p:?}").expect("string write");
    }
    Ok(out)
}

/// `index,trits,probability` rows for probabilities above [`SIMULATE_CUTOFF`].
pub fn simulate_csv(circuit: &Circuit) -> Result<String, CliError> {
    let state = circuit.simulate()?;
    let mut out = String::from("index,trits,probability\n");
    for (i, p) in state.probabilities().into_iter().enumerate() {
        if p > SIMULATE_CUTOFF {
            writeln!(out, "{i},{},{p:?}", format_trits(&index_trits(i, circuit.n)))
                .expect("string write");
        }
    }
    Ok(out)
}

pub fn report_json(report: &VerifyReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

pub fn codec_csv(codec: &PositionCodec) -> String {
    let mut out = String::from("x,trits\n");
    for (x, trits) in codec.table() {
        writeln!(out, "{x},{}", format_trits(&trits)).expect("string write");
    }
    out
}

#[derive(Serialize)]
struct NamedMatrix {
    name: String,
    matrix: Vec<Vec<[f64; 2]>>,
}

fn named(name: &str, rows: Vec<Vec<qutrit_walk::Complex64>>) -> NamedMatrix {
    NamedMatrix {
        name: name.to_string(),
        matrix: rows.into_iter().map(|r| r.into_iter().map(|z| [z.re, z.im]).collect()).collect(),
    }
}

fn rows3(m: &Matrix3) -> Vec<Vec<qutrit_walk::Complex64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

#[derive(Serialize)]
struct GateCatalog {
    z_gates: Vec<NamedMatrix>,
    coins: Vec<NamedMatrix>,
}

pub fn gates_json(kind: Option<&str>) -> Result<String, CliError> {
    let text = match kind {
        Some(label) => {
            let kind = ZKind::from_label(label)
                .ok_or_else(|| CliError::Validation(format!("unknown gate {label:?}")))?;
            serde_json::to_string_pretty(&named(kind.label(), rows3(&z_matrix(kind))))
        }
        None => {
            let z_gates = ZKind::ALL.iter().map(|k| named(k.label(), rows3(&z_matrix(*k)))).collect();
            let coins = [CoinSpec::Dft, CoinSpec::Grover, CoinSpec::Hadamard2]
                .iter()
                .map(|c| named(&c.to_string(), coin_matrix(c).expect("fixed coin").rows()))
                .collect();
            serde_json::to_string_pretty(&GateCatalog { z_gates, coins })
        }
    };
    let mut text = text.expect("catalog serializes");
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qutrit-walk").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn first_ternary_step() {
        let out = run(parse(&["walk", "--kind", "ternary", "--coin", "dft", "--steps", "1"])).unwrap();
        let rows: Vec<&str> = out.text.lines().collect();
        assert_eq!(rows[0], "x,probability");
        assert_eq!(rows.len(), 4);
        for (row, x) in rows[1..].iter().zip(["-1", "0", "1"]) {
            let (rx, p) = row.split_once(',').unwrap();
            assert_eq!(rx, x);
            assert!((p.parse::<f64>().unwrap() - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn binary_zero_steps() {
        let out = run(parse(&["walk", "--kind", "binary", "--coin", "hadamard", "--steps", "0"])).unwrap();
        assert_eq!(out.text, "x,probability\n0,1.0\n");
    }

    #[test]
    fn coin_kind_mismatch_is_validation_error() {
        let err = run(parse(&["walk", "--kind", "binary", "--coin", "dft", "--steps", "3"])).unwrap_err();
        assert!(matches!(err, CliError::Core(qutrit_walk::Error::CoinDimension { .. })));
    }

    #[test]
    fn capacity_message() {
        let err = run(parse(&["synth", "--q", "3", "--steps", "14"])).unwrap_err();
        assert!(err.to_string().contains("capacity floor(3^q/2) = 13"), "{err}");
    }

    #[test]
    fn gates_catalog() {
        let json: serde_json::Value = serde_json::from_str(&gates_json(None).unwrap()).unwrap();
        assert_eq!(json["z_gates"].as_array().unwrap().len(), 5);
        assert_eq!(json["z_gates"][0]["name"], "Z+1");
        assert_eq!(json["z_gates"][0]["matrix"][1][0], serde_json::json!([1.0, 0.0]));
        assert!(gates_json(Some("Z7")).is_err());
    }

    #[test]
    fn rejects_shots() {
        let err = run(parse(&["simulate", "--netlist", "x.json", "--shots", "100"])).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }
}
