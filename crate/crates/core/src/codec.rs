//! Nearest-neighbour encoding of line positions into q-trit strings.
//!
//! A move to the right is a carry cascade over the trits: every trit whose
//! less-significant trits all hold 2 advances by `Z+2`, and the least
//! significant trit always does. A move to the left is the inverse cascade
//! (`Z+1`, carrying on 1). Both read the digits as they were before the move,
//! so only a trailing run of trits changes per step.
//!
//! Trit strings are written most significant first, `x = 1` being `"0..02"`.

use crate::error::{Error, Result};
use crate::gates::ZKind;
use crate::statevector::{flat_index, index_trits, pow3};

/// Largest register accepted by [`PositionCodec::new`]; keeps `3^q` well inside `i64`.
pub const MAX_POSITION_TRITS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `x = 1 -> "0..02"`, `x = -1 -> "0..01"`.
    Primary,
    /// Mirror image of the primary encoding: `encode_alt(x) = encode(-x)`.
    Alternative,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "primary" => Ok(Variant::Primary),
            "alternative" => Ok(Variant::Alternative),
            other => Err(format!("unknown variant {other:?}; expected primary or alternative")),
        }
    }
}

/// A digit-cascade move on a trit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cascade {
    /// `Z+2` digit map, carrying past trits equal to 2.
    Right,
    /// `Z+1` digit map, carrying past trits equal to 1.
    Left,
}

impl Cascade {
    pub fn digit_gate(self) -> ZKind {
        match self {
            Cascade::Right => ZKind::Plus2,
            Cascade::Left => ZKind::Plus1,
        }
    }

    pub fn carry_digit(self) -> u8 {
        match self {
            Cascade::Right => 2,
            Cascade::Left => 1,
        }
    }

    pub fn inverse(self) -> Cascade {
        match self {
            Cascade::Right => Cascade::Left,
            Cascade::Left => Cascade::Right,
        }
    }

    /// Applies the cascade to `trits` (most significant first).
    pub fn apply(self, trits: &[u8]) -> Vec<u8> {
        let gate = self.digit_gate();
        let carry = self.carry_digit();
        let mut out = trits.to_vec();
        // walk from the least significant end; stop once the carry breaks
        for (i, &t) in trits.iter().enumerate().rev() {
            out[i] = gate.map_digit(t);
            if t != carry {
                break;
            }
        }
        out
    }
}

fn check_digits(trits: &[u8]) -> Result<()> {
    match trits.iter().position(|&t| t > 2) {
        Some(position) => Err(Error::InvalidDigit {
            position,
            digit: char::from_digit(trits[position] as u32, 10).unwrap_or('?'),
        }),
        None => Ok(()),
    }
}

/// The right-move permutation on trit strings.
pub fn right_perm(trits: &[u8]) -> Result<Vec<u8>> {
    check_digits(trits)?;
    Ok(Cascade::Right.apply(trits))
}

/// The left-move permutation, inverse of [`right_perm`].
pub fn left_perm(trits: &[u8]) -> Result<Vec<u8>> {
    check_digits(trits)?;
    Ok(Cascade::Left.apply(trits))
}

/// Bijection between positions `-capacity..=capacity` and q-trit strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionCodec {
    q: usize,
    variant: Variant,
}

impl PositionCodec {
    pub fn new(q: usize, variant: Variant) -> Result<Self> {
        if q == 0 || q > MAX_POSITION_TRITS {
            return Err(Error::UnsupportedTritCount(q));
        }
        Ok(PositionCodec { q, variant })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// `floor(3^q / 2)`, the largest reachable |x|.
    pub fn capacity(&self) -> i64 {
        (pow3(self.q) / 2) as i64
    }

    /// Cascade realizing x -> x+1 under this variant.
    pub fn right_cascade(&self) -> Cascade {
        match self.variant {
            Variant::Primary => Cascade::Right,
            Variant::Alternative => Cascade::Left,
        }
    }

    pub fn left_cascade(&self) -> Cascade {
        self.right_cascade().inverse()
    }

    // Relabelling each trit as w = (t + 1) mod 3 turns the right cascade into
    // base-3 decrement, and "0..0" into the all-ones number `capacity`. Hence
    // the primary encoding of x is `capacity - x` in those digits.
    fn primary_encode(&self, x: i64) -> Vec<u8> {
        let w = (self.capacity() - x) as usize;
        index_trits(w, self.q).into_iter().map(|d| (d + 2) % 3).collect()
    }

    fn primary_decode(&self, trits: &[u8]) -> i64 {
        let w: Vec<u8> = trits.iter().map(|&t| (t + 1) % 3).collect();
        self.capacity() - flat_index(&w) as i64
    }

    pub fn encode(&self, x: i64) -> Result<Vec<u8>> {
        let capacity = self.capacity();
        if x.abs() > capacity {
            return Err(Error::PositionOutOfRange { x, capacity });
        }
        Ok(match self.variant {
            Variant::Primary => self.primary_encode(x),
            Variant::Alternative => self.primary_encode(-x),
        })
    }

    pub fn decode(&self, trits: &[u8]) -> Result<i64> {
        if trits.len() != self.q {
            return Err(Error::LengthMismatch { expected: self.q, actual: trits.len() });
        }
        check_digits(trits)?;
        let x = self.primary_decode(trits);
        Ok(match self.variant {
            Variant::Primary => x,
            Variant::Alternative => -x,
        })
    }

    /// `encode` as a flat register index of the position trits.
    pub fn encode_index(&self, x: i64) -> Result<usize> {
        self.encode(x).map(|t| flat_index(&t))
    }

    /// Every `(x, trits)` pair, x ascending.
    pub fn table(&self) -> Vec<(i64, Vec<u8>)> {
        let c = self.capacity();
        (-c..=c).map(|x| (x, self.encode(x).expect("in range"))).collect()
    }
}

pub fn encode(x: i64, codec: &PositionCodec) -> Result<Vec<u8>> {
    codec.encode(x)
}

pub fn decode(trits: &[u8], codec: &PositionCodec) -> Result<i64> {
    codec.decode(trits)
}
