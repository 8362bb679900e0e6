//! Test-only oracles. Nothing here calls into the gate kernel or the walk
//! stepper; everything is rebuilt from dense matrices or explicit path sums.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use qutrit_walk::{Matrix3, StateVector};
use rand::Rng;

pub type Dense = Vec<Vec<Complex64>>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `e^{2 pi i k / 3}`.
pub fn omega(k: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (k % 3) as f64 / 3.0)
}

pub fn identity(d: usize) -> Dense {
    (0..d).map(|i| (0..d).map(|j| if i == j { ONE } else { ZERO }).collect()).collect()
}

pub fn from3(m: &Matrix3) -> Dense {
    m.iter().map(|r| r.to_vec()).collect()
}

pub fn kron(a: &Dense, b: &Dense) -> Dense {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![ZERO; ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn matvec(m: &Dense, v: &[Complex64]) -> Vec<Complex64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn projector(value: u8) -> Dense {
    let mut p = vec![vec![ZERO; 3]; 3];
    p[value as usize][value as usize] = ONE;
    p
}

/// Full register matrix of a controlled single-qutrit gate:
/// `I + (x)_w F_w` with `F = U - I` on the target, `|v><v|` on controls, `I` elsewhere.
pub fn controlled_dense(n: usize, unitary: &Matrix3, target: usize, controls: &[(usize, u8)]) -> Dense {
    let u_minus_i = add(&from3(unitary), &identity(3).iter().map(|r| r.iter().map(|x| -x).collect()).collect());
    let mut acc = vec![vec![ONE]];
    for w in 0..n {
        let factor = if w == target {
            u_minus_i.clone()
        } else if let Some(&(_, v)) = controls.iter().find(|(cw, _)| *cw == w) {
            projector(v)
        } else {
            identity(3)
        };
        acc = kron(&acc, &factor);
    }
    add(&identity(3usize.pow(n as u32)), &acc)
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Haar-ish random unitary by Gram-Schmidt on random complex columns.
pub fn random_unitary<R: Rng>(rng: &mut R) -> Matrix3 {
    let mut cols: Vec<[Complex64; 3]> = Vec::new();
    while cols.len() < 3 {
        let mut v = [random_complex(rng), random_complex(rng), random_complex(rng)];
        for c in &cols {
            let dot: Complex64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for i in 0..3 {
                v[i] -= dot * c[i];
            }
        }
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.map(|a| a / norm));
        }
    }
    let mut m = [[ZERO; 3]; 3];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..3 {
            m[i][j] = c[i];
        }
    }
    m
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    let mut amps: Vec<Complex64> = (0..3usize.pow(n as u32)).map(|_| random_complex(rng)).collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    StateVector::from_amplitudes(n, amps).unwrap()
}

/// Ternary walk amplitudes after `t` steps as an explicit sum over the `3^t`
/// coin paths: each path contributes `prod C[c_k][c_{k-1}]` at the position
/// given by the summed shifts (0 stays, 1 left, 2 right).
pub fn ternary_path_sum(coin: &Dense, initial: usize, t: usize) -> BTreeMap<(i64, usize), Complex64> {
    let mut out = BTreeMap::new();
    for path in 0..3usize.pow(t as u32) {
        let mut p = path;
        let mut prev = initial;
        let mut amp = ONE;
        let mut x = 0i64;
        for _ in 0..t {
            let c = p % 3;
            p /= 3;
            amp *= coin[c][prev];
            x += [0, -1, 1][c];
            prev = c;
        }
        if t == 0 {
            *out.entry((0, initial)).or_insert(ZERO) += ONE;
        } else {
            *out.entry((x, prev)).or_insert(ZERO) += amp;
        }
    }
    out
}

/// The DFT coin written out entry by entry.
pub fn dft_dense() -> Dense {
    let s = 1.0 / 3f64.sqrt();
    (0..3).map(|j| (0..3).map(|k| omega((j * k) as u32) * s).collect()).collect()
}

/// A printed superposition term: `omega^phase |coin> (x) |x>`.
#[derive(Clone, Copy, Debug)]
pub struct Term {
    pub phase: u32,
    pub coin: usize,
    pub x: i64,
}

pub const fn term(phase: u32, coin: usize, x: i64) -> Term {
    Term { phase, coin, x }
}

/// Sums printed terms into `(x, coin) -> amplitude`, scaled by `scale`.
pub fn sum_terms(terms: &[Term], scale: f64) -> BTreeMap<(i64, usize), Complex64> {
    let mut out = BTreeMap::new();
    for t in terms {
        *out.entry((t.x, t.coin)).or_insert(ZERO) += omega(t.phase) * scale;
    }
    out
}

/// Terms of the two-step DFT walk from `|0>|x=0>` as tabulated (all /3).
pub fn table_step2() -> Vec<Term> {
    vec![
        term(0, 0, 0), term(0, 1, -1), term(0, 2, 1),
        term(0, 0, -1), term(1, 1, -2), term(2, 2, 0),
        term(0, 0, 1), term(2, 1, 0), term(1, 2, 2),
    ]
}

/// Terms of the three-step DFT walk as tabulated (all /(3 sqrt 3)); nested
/// phase factors are multiplied out.
pub fn table_step3() -> Vec<Term> {
    vec![
        term(0, 0, 0), term(0, 1, -1), term(0, 2, 1),
        term(0, 0, -1), term(1, 1, -2), term(2, 2, 0),
        term(0, 0, 1), term(2, 1, 0), term(1, 2, 2),
        term(0, 0, -1), term(0, 1, -2), term(0, 2, 0),
        term(1, 0, -2), term(1 + 1, 1, -3), term(1 + 2, 2, -1),
        term(2, 0, 0), term(2 + 2, 1, -1), term(2 + 1, 2, 1),
        term(0, 0, 1), term(0, 1, 0), term(0, 2, 2),
        term(2, 0, 0), term(2 + 1, 1, -1), term(2 + 2, 2, 1),
        term(1, 0, 2), term(1 + 2, 1, 1), term(1 + 1, 2, 3),
    ]
}

/// Positions 0..=13 and -1..=-13 for three position trits, as tabulated.
pub const PRIMARY_POSITIVE: [&str; 14] = [
    "000", "002", "021", "020", "022", "211", "210", "212", "201", "200", "202", "221", "220", "222",
];
pub const PRIMARY_NEGATIVE: [&str; 13] = [
    "001", "012", "010", "011", "122", "120", "121", "102", "100", "101", "112", "110", "111",
];
pub const ALTERNATIVE_POSITIVE: [&str; 14] = [
    "000", "001", "012", "010", "011", "122", "120", "121", "102", "100", "101", "112", "110", "111",
];
pub const ALTERNATIVE_NEGATIVE: [&str; 13] = [
    "002", "021", "020", "022", "211", "210", "212", "201", "200", "202", "221", "220", "222",
];

