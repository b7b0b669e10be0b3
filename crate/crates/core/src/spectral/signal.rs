use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_power_of_two(n: usize) -> bool {
    n >= 1 && n & (n - 1) == 0
}

/// Time-domain complex sequence whose length is a power of two, at least 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
}

impl ComplexSignal {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        let n = samples.len();
        if n < 2 || !is_power_of_two(n) {
            return Err(Error::InvalidLength(n));
        }
        Ok(Self { samples })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); n])
    }

    /// Synthesizes `x[n] = Σ_s x̂[s] e^{i2πsn/N}` from a sparse spectrum.
    pub fn from_spectrum(spectrum: &SparseSpectrum) -> Result<Self> {
        let dense = spectrum.to_dense();
        let samples = super::synthesize_dense(&dense)?;
        Self::new(samples)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    #[inline]
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }
}

impl std::ops::Index<usize> for ComplexSignal {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.samples[i]
    }
}

/// One `(index, value)` pair of a sparse spectrum, in the JSON wire shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub index: usize,
    pub re: f64,
    pub im: f64,
}

/// Sparse frequency-domain representation with a fixed ambient length.
///
/// Entries are kept ordered by index so iteration and serialization are
/// deterministic.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparseSpectrum {
    len: usize,
    entries: BTreeMap<usize, Complex64>,
}

impl SparseSpectrum {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a spectrum from pairs, rejecting duplicates and out-of-range
    /// indices.
    pub fn from_pairs<I>(len: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Complex64)>,
    {
        let mut out = Self::new(len);
        for (index, value) in pairs {
            if index >= len {
                return Err(Error::OutOfRange { index, len });
            }
            if out.entries.insert(index, value).is_some() {
                return Err(Error::DuplicateIndex(index));
            }
        }
        Ok(out)
    }

    pub fn from_entries(len: usize, entries: &[SpectrumEntry]) -> Result<Self> {
        Self::from_pairs(len, entries.iter().map(|e| (e.index, Complex64::new(e.re, e.im))))
    }

    /// Keeps the `k` largest-magnitude entries of a dense spectrum (ties by
    /// lower index).
    pub fn top_k_of_dense(dense: &[Complex64], k: usize) -> Self {
        let mut order: Vec<usize> = (0..dense.len()).collect();
        let k = k.min(dense.len());
        if k < dense.len() {
            order.select_nth_unstable_by(k, |&a, &b| {
                dense[b].norm_sqr().total_cmp(&dense[a].norm_sqr()).then(a.cmp(&b))
            });
        }
        let mut out = Self::new(dense.len());
        for &i in &order[..k] {
            out.entries.insert(i, dense[i]);
        }
        out
    }

    /// Non-zero entries of a dense spectrum whose magnitude exceeds `tol`.
    pub fn support_of_dense(dense: &[Complex64], tol: f64) -> Self {
        let mut out = Self::new(dense.len());
        for (i, v) in dense.iter().enumerate() {
            if v.norm() > tol {
                out.entries.insert(i, *v);
            }
        }
        out
    }

    /// Ambient length `N`.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes `value` at `index`, returning the previous value if any.
    pub fn insert(&mut self, index: usize, value: Complex64) -> Result<Option<Complex64>> {
        if index >= self.len {
            return Err(Error::OutOfRange { index, len: self.len });
        }
        Ok(self.entries.insert(index, value))
    }

    pub fn get(&self, index: usize) -> Option<Complex64> {
        self.entries.get(&index).copied()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.entries.contains_key(&index)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn to_dense(&self) -> Vec<Complex64> {
        let mut dense = vec![Complex64::new(0.0, 0.0); self.len];
        for (&i, &v) in &self.entries {
            dense[i] = v;
        }
        dense
    }

    pub fn to_entries(&self) -> Vec<SpectrumEntry> {
        self.iter()
            .map(|(index, v)| SpectrumEntry {
                index,
                re: v.re,
                im: v.im,
            })
            .collect()
    }

    /// Largest per-entry error against `other` relative to each reference
    /// magnitude, plus whether both supports coincide.
    pub fn compare(&self, reference: &SparseSpectrum) -> (bool, f64) {
        let same_support =
            self.nnz() == reference.nnz() && self.indices().zip(reference.indices()).all(|(a, b)| a == b);
        let mut worst: f64 = 0.0;
        for (i, want) in reference.iter() {
            let got = self.get(i).unwrap_or_default();
            let scale = want.norm().max(f64::MIN_POSITIVE);
            worst = worst.max((got - want).norm() / scale);
        }
        (same_support, worst)
    }
}
