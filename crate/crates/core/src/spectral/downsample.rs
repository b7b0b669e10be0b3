use num_complex::Complex64;

use super::fft::fft_in_place;
use crate::error::{Error, Result};

/// `data[k] = parent[(d·k + shift) mod N]` for `k < N/d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DownsampleView {
    pub d: usize,
    pub shift: usize,
    pub data: Vec<Complex64>,
}

pub fn downsample(x: &[Complex64], d: usize, shift: usize) -> Result<DownsampleView> {
    let n = x.len();
    if d == 0 || n == 0 || n % d != 0 {
        return Err(Error::BadFactor { n, d });
    }
    let shift = shift % n;
    let data = (0..n / d)
        .map(|k| {
            let i = d * k + shift;
            x[if i >= n { i - n } else { i }]
        })
        .collect();
    Ok(DownsampleView { d, shift, data })
}

/// DFT of a downsampled view, scaled so that bin `k` equals
/// `Σ_t x̂[k + tN/d] e^{i2π(k + tN/d)·shift/N}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ViewSpectrum {
    pub d: usize,
    pub shift: usize,
    pub bins: Vec<Complex64>,
}

pub fn transform_view(view: DownsampleView) -> Result<ViewSpectrum> {
    let DownsampleView { d, shift, mut data } = view;
    fft_in_place(&mut data, false)?;
    let scale = 1.0 / data.len() as f64;
    data.iter_mut().for_each(|v| *v *= scale);
    Ok(ViewSpectrum { d, shift, bins: data })
}

impl ViewSpectrum {
    /// Number of bins `N/d`.
    #[inline]
    pub fn bins_len(&self) -> usize {
        self.bins.len()
    }

    /// Re-expresses the view at stride `2d`: `x[2dk + l]` is every other
    /// sample of `x[dk + l]`, so bin `k` of the coarser view is the sum of
    /// bins `k` and `k + L/2` of this one.
    pub fn fold(&self) -> ViewSpectrum {
        let half = self.bins.len() / 2;
        if half == 0 {
            return self.clone();
        }
        let bins = (0..half).map(|k| self.bins[k] + self.bins[k + half]).collect();
        ViewSpectrum {
            d: self.d * 2,
            shift: self.shift,
            bins,
        }
    }
}

/// Bin values `m_j` for one downsampled frequency, one per shift.
#[derive(Debug, Clone, PartialEq)]
pub struct SyndromeSet {
    pub bin: usize,
    pub values: Vec<Complex64>,
    pub shifts: Vec<usize>,
}

impl SyndromeSet {
    pub fn new(bin: usize, values: Vec<Complex64>, shifts: Vec<usize>) -> Self {
        debug_assert_eq!(values.len(), shifts.len());
        Self { bin, values, shifts }
    }

    /// Syndromes taken at consecutive shifts `0, 1, …, q-1`.
    pub fn consecutive(bin: usize, values: Vec<Complex64>) -> Self {
        let shifts = (0..values.len()).collect();
        Self { bin, values, shifts }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Collects bin `k` from each transformed view.
pub fn syndromes_for_bin(views: &[ViewSpectrum], k: usize) -> Result<SyndromeSet> {
    let Some(first) = views.first() else {
        return Ok(SyndromeSet::new(k, Vec::new(), Vec::new()));
    };
    if views.iter().any(|v| v.d != first.d) {
        return Err(Error::Config("views do not share a downsampling factor".into()));
    }
    let len = first.bins_len();
    if k >= len {
        return Err(Error::OutOfRange { index: k, len });
    }
    Ok(SyndromeSet::new(
        k,
        views.iter().map(|v| v.bins[k]).collect(),
        views.iter().map(|v| v.shift).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{root_power, synthesis_oracle};
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn picks_stride_and_shift() {
        let x = [c(1.0), c(2.0), c(3.0), c(4.0)];
        assert_eq!(downsample(&x, 2, 0).unwrap().data, vec![c(1.0), c(3.0)]);
        assert_eq!(downsample(&x, 2, 1).unwrap().data, vec![c(2.0), c(4.0)]);
        assert_eq!(downsample(&x, 1, 0).unwrap().data, x.to_vec());
    }

    #[test]
    fn shift_wraps_around() {
        let x = [c(1.0), c(2.0), c(3.0), c(4.0)];
        assert_eq!(downsample(&x, 2, 3).unwrap().data, vec![c(4.0), c(2.0)]);
    }

    #[test]
    fn rejects_non_divisor() {
        let x = vec![c(0.0); 8];
        assert_eq!(downsample(&x, 3, 0), Err(Error::BadFactor { n: 8, d: 3 }));
        assert!(downsample(&x, 0, 0).is_err());
    }

    fn views_of(spec: &[Complex64], d: usize, shifts: &[usize]) -> Vec<ViewSpectrum> {
        let x = synthesis_oracle(spec);
        shifts
            .iter()
            .map(|&l| transform_view(downsample(&x, d, l).unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn single_tone_syndromes() {
        let mut spec = vec![c(0.0); 8];
        spec[5] = c(2.0);
        let views = views_of(&spec, 4, &[0, 1]);
        let m = syndromes_for_bin(&views, 1).unwrap();
        assert!((m.values[0] - c(2.0)).norm() < 1e-12);
        let want = 2.0 * Complex64::cis(5.0 * PI / 4.0);
        assert!((m.values[1] - want).norm() < 1e-12);
        assert_eq!(m.shifts, vec![0, 1]);
    }

    #[test]
    fn zero_signal_has_zero_syndromes() {
        let views = views_of(&[c(0.0); 8], 4, &[0, 1]);
        let m = syndromes_for_bin(&views, 1).unwrap();
        assert!(m.values.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn collision_sums_values() {
        let mut spec = vec![c(0.0); 8];
        spec[1] = c(1.0);
        spec[5] = c(1.0);
        let views = views_of(&spec, 2, &[0]);
        let m = syndromes_for_bin(&views, 1).unwrap();
        assert!((m.values[0] - c(2.0)).norm() < 1e-12);
    }

    #[test]
    fn bin_out_of_range() {
        let views = views_of(&[c(0.0); 8], 4, &[0]);
        assert_eq!(
            syndromes_for_bin(&views, 2),
            Err(Error::OutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn fold_matches_direct_view() {
        let mut spec = vec![c(0.0); 32];
        spec[3] = Complex64::new(0.3, 1.0);
        spec[7] = c(-2.0);
        spec[19] = Complex64::new(0.0, 0.7);
        let x = synthesis_oracle(&spec);
        for l in 0..4 {
            let fine = transform_view(downsample(&x, 2, l).unwrap()).unwrap();
            let coarse = transform_view(downsample(&x, 4, l).unwrap()).unwrap();
            let folded = fine.fold();
            assert_eq!(folded.d, 4);
            for (a, b) in folded.bins.iter().zip(&coarse.bins) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn shifted_bin_is_root_weighted_sum() {
        let n = 64;
        let d = 8;
        let mut spec = vec![c(0.0); n];
        let support = [
            (5usize, Complex64::new(1.0, -1.0)),
            (13, c(0.5)),
            (45, Complex64::new(0.0, 2.0)),
        ];
        for &(s, v) in &support {
            spec[s] = v;
        }
        let views = views_of(&spec, d, &[0, 1, 2, 7]);
        let m = syndromes_for_bin(&views, 5).unwrap();
        for (j, &l) in m.shifts.iter().enumerate() {
            let want: Complex64 = support.iter().map(|&(s, v)| v * root_power(s, l, n)).sum();
            assert!((m.values[j] - want).norm() < 1e-12);
        }
    }
}
