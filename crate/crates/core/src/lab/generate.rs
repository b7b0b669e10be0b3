use num_complex::Complex64;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::spectral::{synthesize_dense, ComplexSignal, SparseSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValueDistribution {
    /// `e^{iφ}` with `φ` uniform.
    #[default]
    UnitPhase,
    /// Circular complex Gaussian with unit variance.
    ComplexGaussian,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactSparseSpec {
    pub n: usize,
    pub k: usize,
    pub values: ValueDistribution,
    pub seed: u64,
}

/// Circular complex Gaussian with `E|z|² = σ²`.
fn complex_normal(rng: &mut ChaCha8Rng, sigma: f64) -> Complex64 {
    if sigma == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let part = Normal::new(0.0, sigma / 2f64.sqrt()).expect("finite sigma");
    Complex64::new(part.sample(rng), part.sample(rng))
}

/// An exactly `K`-sparse spectrum on a uniformly drawn support, and its
/// time-domain signal.
pub fn gen_exact(spec: &ExactSparseSpec) -> Result<(ComplexSignal, SparseSpectrum)> {
    if spec.k > spec.n {
        return Err(Error::Config(format!("K = {} exceeds N = {}", spec.k, spec.n)));
    }
    ComplexSignal::zeros(spec.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut support = sample(&mut rng, spec.n, spec.k).into_vec();
    support.sort_unstable();
    let truth = SparseSpectrum::from_pairs(
        spec.n,
        support.into_iter().map(|s| {
            let v = match spec.values {
                ValueDistribution::UnitPhase => {
                    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
                }
                ValueDistribution::ComplexGaussian => complex_normal(&mut rng, 1.0),
            };
            (s, v)
        }),
    )?;
    Ok((ComplexSignal::from_spectrum(&truth)?, truth))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixtureSpec {
    pub n: usize,
    pub k: usize,
    pub sigma_on: f64,
    pub sigma_off: f64,
    pub seed: u64,
}

impl MixtureSpec {
    /// Probability that a frequency is drawn from the strong component.
    pub fn p(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma_off >= 0.0 && self.sigma_on > self.sigma_off && self.sigma_on.is_finite()) {
            return Err(Error::Config("need sigma_on > sigma_off >= 0".into()));
        }
        if self.k > self.n {
            return Err(Error::Config(format!("K = {} exceeds N = {}", self.k, self.n)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mixture {
    pub signal: ComplexSignal,
    /// The `K` largest-magnitude frequencies.
    pub significant: SparseSpectrum,
    pub full: Vec<Complex64>,
}

/// Generally sparse spectrum: each frequency is complex Gaussian with
/// variance `σ_on²` with probability `K/N`, else `σ_off²`.
pub fn gen_mixture(spec: &MixtureSpec) -> Result<Mixture> {
    spec.validate()?;
    ComplexSignal::zeros(spec.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let p = spec.p();
    let full: Vec<Complex64> = (0..spec.n)
        .map(|_| {
            let sigma = if rng.random_bool(p) {
                spec.sigma_on
            } else {
                spec.sigma_off
            };
            complex_normal(&mut rng, sigma)
        })
        .collect();
    let significant = SparseSpectrum::top_k_of_dense(&full, spec.k);
    let signal = ComplexSignal::new(synthesize_dense(&full)?)?;
    Ok(Mixture {
        signal,
        significant,
        full,
    })
}

/// `σ_off` putting the expected significant-to-rest energy ratio at
/// `snr_db`, taking `K` strong and `N - K` weak terms.
pub fn sigma_off_for_snr(n: usize, k: usize, sigma_on: f64, snr_db: f64) -> f64 {
    let ratio = 10f64.powf(snr_db / 10.0);
    sigma_on * (k as f64 / ((n - k) as f64 * ratio)).sqrt()
}

/// Monte Carlo refinement of [`sigma_off_for_snr`]: bisects `σ_off` until
/// the pooled significant-to-rest energy ratio over `trials` fixed draws
/// hits `snr_db`. Pooling keeps the target stable; per-trial `SNR(x̂_s)`
/// has a long lower tail.
///
/// The first-order formula ignores that the strong-component count is
/// random, which matters at high SNR: surplus strong terms beyond the top
/// `K` land in the insignificant part.
pub fn calibrate_sigma_off(n: usize, k: usize, sigma_on: f64, snr_db: f64, trials: usize, seed: u64) -> f64 {
    let p = k as f64 / n as f64;
    let draws: Vec<(Vec<bool>, Vec<f64>)> = (0..trials)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let mut on = Vec::with_capacity(n);
            let mut mag2 = Vec::with_capacity(n);
            for _ in 0..n {
                on.push(rng.random_bool(p));
                mag2.push(complex_normal(&mut rng, 1.0).norm_sqr());
            }
            (on, mag2)
        })
        .collect();
    let pooled_snr = |sigma_off: f64| -> f64 {
        let (on2, off2) = (sigma_on * sigma_on, sigma_off * sigma_off);
        let (mut sig, mut rest) = (0.0, 0.0);
        let mut scratch = vec![0.0; n];
        for (on, mag2) in &draws {
            for i in 0..n {
                scratch[i] = mag2[i] * if on[i] { on2 } else { off2 };
            }
            let energy: f64 = scratch.iter().sum();
            let kk = k.min(n);
            if kk < n && kk > 0 {
                scratch.select_nth_unstable_by(kk - 1, |a, b| b.total_cmp(a));
            }
            let top: f64 = scratch[..kk].iter().sum();
            sig += top;
            rest += energy - top;
        }
        10.0 * (sig / rest).log10()
    };
    let guess = sigma_off_for_snr(n, k, sigma_on, snr_db);
    let (mut lo, mut hi) = ((guess * 1e-3).ln(), sigma_on.min(guess * 10.0).ln());
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if pooled_snr(mid.exp()) > snr_db {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi)).exp()
}
