//! Direct O(N²) transforms used to validate everything else.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::ComplexSignal;

fn table(n: usize, sign: f64) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::cis(sign * 2.0 * PI * j as f64 / n as f64))
        .collect()
}

/// `x̂[k] = (1/N) Σ_n x[n] e^{-i2πkn/N}` by direct summation.
pub fn forward_dft_oracle(x: &ComplexSignal) -> Vec<Complex64> {
    let n = x.len();
    let w = table(n, -1.0);
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (t, &v) in x.samples().iter().enumerate() {
                acc += v * w[(k * t) % n];
            }
            acc * scale
        })
        .collect()
}

/// `x[n] = Σ_k x̂[k] e^{+i2πkn/N}` by direct summation.
pub fn synthesis_oracle(spectrum: &[Complex64]) -> Vec<Complex64> {
    let n = spectrum.len();
    let w = table(n, 1.0);
    (0..n)
        .map(|t| {
            spectrum
                .iter()
                .enumerate()
                .filter(|(_, v)| v.re != 0.0 || v.im != 0.0)
                .map(|(k, &v)| v * w[(k * t) % n])
                .sum()
        })
        .collect()
}
