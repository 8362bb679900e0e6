use thiserror::Error;

/// Errors raised by register construction, gate construction, walks and synthesis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid trit digit {digit:?} at position {position}")]
    InvalidDigit { position: usize, digit: char },

    #[error("expected {expected} trits, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("amplitude vector has length {actual}, expected 3^{n} = {expected}")]
    DimensionMismatch { n: usize, expected: usize, actual: usize },

    #[error("wire {wire} out of range for a register of {n} qutrits")]
    WireOutOfRange { wire: usize, n: usize },

    #[error("wire {0} is used more than once in a gate")]
    DuplicateWire(usize),

    #[error("control value {0} is not a trit")]
    InvalidControlValue(u8),

    #[error("matrix is not unitary (max |U^dag U - I| entry = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("coin parameter rho = {0} must lie in (0, 1)")]
    InvalidRho(f64),

    #[error("self-loop weight l = {0} must be positive")]
    InvalidSelfLoop(f64),

    #[error("coin of dimension {coin} cannot drive a walk with coin dimension {walk}")]
    CoinDimension { coin: usize, walk: usize },

    #[error("unknown coin {0:?}; expected dft, grover, grho:<rho>, lackadaisical:<l> or hadamard")]
    UnknownCoin(String),

    #[error("initial coin vector must have length {expected} and unit norm")]
    InvalidInitialCoin { expected: usize },

    #[error("position {x} outside the encodable range [-{capacity}, {capacity}]")]
    PositionOutOfRange { x: i64, capacity: i64 },

    #[error("register of {0} position trits is not supported")]
    UnsupportedTritCount(usize),

    #[error("{steps} steps exceed the capacity floor(3^q/2) = {capacity} for q = {q}")]
    CapacityExceeded { q: usize, steps: usize, capacity: usize },

    #[error("step index {index} outside 1..={steps}")]
    StepOutOfRange { index: usize, steps: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
