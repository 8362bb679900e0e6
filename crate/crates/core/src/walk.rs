//! Direct evolution of coined walks on the unbounded integer line.
//!
//! This is the reference the synthesized circuits are checked against, so it
//! deliberately shares nothing with the circuit path beyond the coin matrices.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::{coin_matrix, CoinSpec};
use crate::matrix::{ONE, ZERO};

/// Probabilities below this are dropped by [`WalkState::distribution`].
pub const PRUNE_THRESHOLD: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    /// Two-state coin: `0` moves to x-1, `1` moves to x+1.
    Binary,
    /// Three-state lazy coin: `0` stays, `1` moves to x-1, `2` moves to x+1.
    Ternary,
}

impl WalkKind {
    pub fn coin_dimension(self) -> usize {
        match self {
            WalkKind::Binary => 2,
            WalkKind::Ternary => 3,
        }
    }

    /// Displacement applied to coin component `c`.
    fn shift(self, c: usize) -> i64 {
        match (self, c) {
            (WalkKind::Binary, 0) => -1,
            (WalkKind::Binary, _) => 1,
            (WalkKind::Ternary, 0) => 0,
            (WalkKind::Ternary, 1) => -1,
            (WalkKind::Ternary, _) => 1,
        }
    }

    fn from_dimension(d: usize) -> Result<WalkKind> {
        match d {
            2 => Ok(WalkKind::Binary),
            3 => Ok(WalkKind::Ternary),
            other => Err(Error::CoinDimension { coin: other, walk: 3 }),
        }
    }
}

/// Coin amplitudes per occupied position.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    d: usize,
    amps: BTreeMap<i64, Vec<Complex64>>,
}

impl WalkState {
    /// `coin (x) |x>`.
    pub fn localized(x: i64, coin: Vec<Complex64>) -> Result<Self> {
        WalkKind::from_dimension(coin.len())?;
        let mut amps = BTreeMap::new();
        amps.insert(x, coin);
        Ok(WalkState { d: amps[&x].len(), amps })
    }

    /// Basis coin state `|c>` at position `x`.
    pub fn basis(d: usize, coin: usize, x: i64) -> Result<Self> {
        if coin >= d {
            return Err(Error::InvalidInitialCoin { expected: d });
        }
        let mut v = vec![ZERO; d];
        v[coin] = ONE;
        Self::localized(x, v)
    }

    pub fn coin_dimension(&self) -> usize {
        self.d
    }

    pub fn kind(&self) -> WalkKind {
        WalkKind::from_dimension(self.d).expect("dimension checked at construction")
    }

    /// Coin amplitude `c` at position `x`; zero for unoccupied positions.
    pub fn amplitude(&self, x: i64, c: usize) -> Complex64 {
        self.amps.get(&x).map_or(ZERO, |v| v[c])
    }

    pub fn coin_vector(&self, x: i64) -> Option<&[Complex64]> {
        self.amps.get(&x).map(Vec::as_slice)
    }

    /// Occupied positions in ascending order.
    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.amps.keys().copied()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.values().flatten().map(|a| a.norm_sqr()).sum()
    }

    /// One walk step: coin on every position, then the coin-conditioned shift.
    pub fn step(&self, coin: &CoinSpec) -> Result<WalkState> {
        let matrix = coin_matrix(coin)?;
        if matrix.dim() != self.d {
            return Err(Error::CoinDimension { coin: matrix.dim(), walk: self.d });
        }
        let kind = self.kind();
        let mut next: BTreeMap<i64, Vec<Complex64>> = BTreeMap::new();
        for (&x, v) in &self.amps {
            let tossed = matrix.apply(v);
            for (c, a) in tossed.into_iter().enumerate() {
                let slot = next.entry(x + kind.shift(c)).or_insert_with(|| vec![ZERO; self.d]);
                slot[c] += a;
            }
        }
        Ok(WalkState { d: self.d, amps: next })
    }

    /// `(x, P(x))` ascending in x, omitting probabilities below [`PRUNE_THRESHOLD`].
    pub fn distribution(&self) -> Vec<(i64, f64)> {
        self.amps
            .iter()
            .map(|(&x, v)| (x, v.iter().map(|a| a.norm_sqr()).sum::<f64>()))
            .filter(|&(_, p)| p >= PRUNE_THRESHOLD)
            .collect()
    }

    /// `P(x)` for every x in `lo..=hi`, unoccupied positions reported as exact zeros.
    pub fn distribution_over(&self, lo: i64, hi: i64) -> Vec<(i64, f64)> {
        (lo..=hi).map(|x| (x, self.probability(x))).collect()
    }

    pub fn probability(&self, x: i64) -> f64 {
        self.amps.get(&x).map_or(0.0, |v| v.iter().map(|a| a.norm_sqr()).sum())
    }
}

pub fn distribution(state: &WalkState) -> Vec<(i64, f64)> {
    state.distribution()
}

/// Starting coin state of a walk.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialCoin {
    Basis(usize),
    Vector(Vec<Complex64>),
}

impl Default for InitialCoin {
    fn default() -> Self {
        InitialCoin::Basis(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkConfig {
    pub kind: WalkKind,
    pub coin: CoinSpec,
    pub steps: usize,
    pub initial_coin: InitialCoin,
}

impl WalkConfig {
    pub fn new(kind: WalkKind, coin: CoinSpec, steps: usize) -> Self {
        WalkConfig { kind, coin, steps, initial_coin: InitialCoin::default() }
    }

    pub fn validate(&self) -> Result<()> {
        self.coin.validate()?;
        let d = self.kind.coin_dimension();
        if self.coin.dimension() != d {
            return Err(Error::CoinDimension { coin: self.coin.dimension(), walk: d });
        }
        match &self.initial_coin {
            InitialCoin::Basis(c) if *c >= d => Err(Error::InvalidInitialCoin { expected: d }),
            InitialCoin::Vector(v) => {
                let norm: f64 = v.iter().map(|a| a.norm_sqr()).sum();
                if v.len() != d || (norm - 1.0).abs() > 1e-10 {
                    Err(Error::InvalidInitialCoin { expected: d })
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn initial_state(&self) -> Result<WalkState> {
        self.validate()?;
        let d = self.kind.coin_dimension();
        match &self.initial_coin {
            InitialCoin::Basis(c) => WalkState::basis(d, *c, 0),
            InitialCoin::Vector(v) => WalkState::localized(0, v.clone()),
        }
    }
}

/// Evolves `config.steps` steps from `initial_coin (x) |x = 0>`.
pub fn evolve(config: &WalkConfig) -> Result<WalkState> {
    let mut state = config.initial_state()?;
    for _ in 0..config.steps {
        state = state.step(&config.coin)?;
    }
    Ok(state)
}

/// Every intermediate state, index `t` holding the state after `t` steps.
pub fn trajectory(config: &WalkConfig) -> Result<Vec<WalkState>> {
    let mut states = vec![config.initial_state()?];
    for _ in 0..config.steps {
        let next = states.last().expect("non-empty").step(&config.coin)?;
        states.push(next);
    }
    Ok(states)
}
