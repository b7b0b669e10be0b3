//! Iterative radix-2 decimation-in-time FFT.

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::rc::Rc;

use num_complex::Complex64;

use super::signal::is_power_of_two;
use crate::error::{Error, Result};

/// Output scaling of the forward transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// `X[k] = Σ_n x[n] e^{-i2πkn/N}`.
    Sum,
    /// `X[k] = (1/N) Σ_n x[n] e^{-i2πkn/N}`.
    OneOverN,
}

struct Plan {
    twiddles: Vec<Complex64>,
    bitrev: Vec<u32>,
}

impl Plan {
    fn new(n: usize) -> Self {
        let twiddles = (0..n / 2)
            .map(|k| Complex64::cis(-2.0 * PI * k as f64 / n as f64))
            .collect();
        let bits = n.trailing_zeros();
        let bitrev = (0..n as u32)
            .map(|i| if bits == 0 { 0 } else { i.reverse_bits() >> (32 - bits) })
            .collect();
        Self { twiddles, bitrev }
    }
}

thread_local! {
    static PLANS: RefCell<HashMap<usize, Rc<Plan>>> = RefCell::new(HashMap::new());
}

fn plan_for(n: usize) -> Rc<Plan> {
    PLANS.with(|plans| {
        plans
            .borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(Plan::new(n)))
            .clone()
    })
}

/// Unnormalized in-place transform. `inverse` flips the exponent sign.
pub fn fft_in_place(buf: &mut [Complex64], inverse: bool) -> Result<()> {
    let n = buf.len();
    if !is_power_of_two(n) {
        return Err(Error::InvalidLength(n));
    }
    if n == 1 {
        return Ok(());
    }
    let plan = plan_for(n);
    for (i, &j) in plan.bitrev.iter().enumerate() {
        let j = j as usize;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut half = 1;
    while half < n {
        let stride = n / (2 * half);
        for start in (0..n).step_by(2 * half) {
            for j in 0..half {
                let mut w = plan.twiddles[j * stride];
                if inverse {
                    w = w.conj();
                }
                let a = buf[start + j];
                let b = buf[start + j + half] * w;
                buf[start + j] = a + b;
                buf[start + j + half] = a - b;
            }
        }
        half *= 2;
    }
    Ok(())
}

/// Forward DFT of a power-of-two length sequence (length 1 allowed).
pub fn fft(x: &[Complex64], normalization: Normalization) -> Result<Vec<Complex64>> {
    let mut out = x.to_vec();
    fft_in_place(&mut out, false)?;
    if normalization == Normalization::OneOverN {
        let scale = 1.0 / out.len() as f64;
        out.iter_mut().for_each(|v| *v *= scale);
    }
    Ok(out)
}

/// Synthesis `x[n] = Σ_k x̂[k] e^{+i2πkn/N}` (no normalization).
pub fn synthesize_dense(spectrum: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut out = spectrum.to_vec();
    fft_in_place(&mut out, true)?;
    Ok(out)
}
