//! Small fixed-size complex matrices used for single-qutrit gates and coins.

use num_complex::Complex64;

pub type Matrix3 = [[Complex64; 3]; 3];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn identity3() -> Matrix3 {
    let mut m = [[ZERO; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ONE;
    }
    m
}

pub fn mul3(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn dagger3(a: &Matrix3) -> Matrix3 {
    let mut out = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

/// Largest entrywise deviation of `U^dag U` from the identity.
pub fn unitarity_deviation<R: AsRef<[Complex64]>>(rows: &[R]) -> f64 {
    let d = rows.len();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let dot: Complex64 = (0..d).map(|k| rows[k].as_ref()[i].conj() * rows[k].as_ref()[j]).sum();
            let target = if i == j { ONE } else { ZERO };
            worst = worst.max((dot - target).norm());
        }
    }
    worst
}

/// Largest entrywise absolute difference between two 3x3 matrices.
pub fn max_diff3(a: &Matrix3, b: &Matrix3) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
