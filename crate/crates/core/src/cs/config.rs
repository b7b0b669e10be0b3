use crate::error::{Error, Result};
use crate::poly::MAX_COLLISIONS;
use crate::spectral::is_power_of_two;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralConfig {
    pub n: usize,
    /// Number of significant frequencies.
    pub k: usize,
    /// Most collisions assumed per bin.
    pub a_max: usize,
    /// Stride; `None` selects `N/(32K)`.
    pub d: Option<usize>,
    /// Seed for the random shift draw.
    pub seed: u64,
    /// Columns kept by pruning per estimated collision.
    pub keep_per_collision: usize,
    /// Disable to skip the whole pruning strategy: no collision vote and no
    /// column pruning, so every bin runs subspace pursuit with `a_max` over
    /// all of its candidate columns.
    pub prune: bool,
}

impl GeneralConfig {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            a_max: 3,
            d: None,
            seed: 0,
            keep_per_collision: 2,
            prune: true,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_a_max(mut self, a_max: usize) -> Self {
        self.a_max = a_max;
        self
    }

    pub fn with_prune(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    /// Random shifts per bin, `3·a_max`.
    #[inline]
    pub fn r(&self) -> usize {
        3 * self.a_max
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || !is_power_of_two(self.n) {
            return Err(Error::InvalidLength(self.n));
        }
        if !(1..=MAX_COLLISIONS).contains(&self.a_max) {
            return Err(Error::Config(format!("a_max {} outside 1..=4", self.a_max)));
        }
        if self.keep_per_collision == 0 {
            return Err(Error::Config("keep_per_collision must be positive".into()));
        }
        if let Some(d) = self.d {
            if d == 0 || d > self.n || self.n % d != 0 {
                return Err(Error::BadFactor { n: self.n, d });
            }
        }
        Ok(())
    }

    /// The configured stride, or `N/(32K)` rounded down to a power of two
    /// and clamped to at least 1.
    pub fn stride(&self) -> Result<usize> {
        self.validate()?;
        if let Some(d) = self.d {
            return Ok(d);
        }
        let ratio = self.n / (32 * self.k.max(1));
        Ok(if ratio == 0 { 1 } else { 1 << ratio.ilog2() })
    }
}
