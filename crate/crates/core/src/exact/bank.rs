use num_complex::Complex64;

use crate::error::Result;
use crate::spectral::{downsample, root_power, transform_view, SyndromeSet, ViewSpectrum};

/// Transformed views at a common stride, with the bookkeeping both solvers
/// need: sample energy for the zero threshold and FFT work.
pub(crate) struct ViewBank<'a> {
    x: &'a [Complex64],
    pub d: usize,
    pub views: Vec<ViewSpectrum>,
    energy: f64,
    samples_read: usize,
    pub fft_samples: usize,
}

impl<'a> ViewBank<'a> {
    pub fn new(x: &'a [Complex64], d: usize) -> Self {
        Self {
            x,
            d,
            views: Vec::new(),
            energy: 0.0,
            samples_read: 0,
            fft_samples: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn bins(&self) -> usize {
        self.x.len() / self.d
    }

    pub fn add_shift(&mut self, shift: usize) -> Result<()> {
        let view = downsample(self.x, self.d, shift)?;
        self.energy += view.data.iter().map(|v| v.norm_sqr()).sum::<f64>();
        self.samples_read += view.data.len();
        self.fft_samples += view.data.len();
        self.views.push(transform_view(view)?);
        Ok(())
    }

    /// Moves every view to stride `2d`.
    pub fn double(&mut self) {
        for v in self.views.iter_mut() {
            *v = v.fold();
        }
        self.d *= 2;
    }

    /// `ε · RMS · d`, with the RMS taken over the samples read so far.
    pub fn threshold(&self, eps: f64) -> f64 {
        if self.samples_read == 0 {
            return 0.0;
        }
        eps * (self.energy / self.samples_read as f64).sqrt() * self.d as f64
    }

    pub fn syndromes(&self, k: usize) -> SyndromeSet {
        SyndromeSet::new(
            k,
            self.views.iter().map(|v| v.bins[k]).collect(),
            self.views.iter().map(|v| v.shift).collect(),
        )
    }

    pub fn is_active(&self, k: usize, threshold: f64) -> bool {
        self.views.iter().any(|v| v.bins[k].norm() > threshold)
    }

    /// Removes frequency `s` with value `v` from every view.
    pub fn subtract(&mut self, s: usize, value: Complex64) {
        self.subtract_from(0, s, value);
    }

    /// Removes frequency `s` with value `v` from views `first..`.
    pub fn subtract_from(&mut self, first: usize, s: usize, value: Complex64) {
        let n = self.n();
        let bins = self.bins();
        for view in self.views[first..].iter_mut() {
            view.bins[s % bins] -= value * root_power(s, view.shift, n);
        }
    }
}

/// Active bins below this count are decoded on the calling thread.
const PARALLEL_MIN_BINS: usize = 256;

/// Decodes each bin, trying collision counts in the given order and keeping
/// the first decode that passes every check.
pub(crate) fn decode_bins(
    bank: &ViewBank<'_>,
    bins: &[usize],
    orders: &[usize],
) -> Vec<(usize, Option<crate::poly::DecodedBin>)> {
    use rayon::prelude::*;
    let n = bank.n();
    let d = bank.d;
    let one = |&k: &usize| {
        let syn = bank.syndromes(k);
        let found = orders
            .iter()
            .find_map(|&a| match crate::poly::decode_bin(&syn, a, n, d, k) {
                Ok(dec) if dec.is_valid() => Some(dec),
                _ => None,
            });
        (k, found)
    };
    if bins.len() >= PARALLEL_MIN_BINS {
        bins.par_iter().map(one).collect()
    } else {
        bins.iter().map(one).collect()
    }
}
