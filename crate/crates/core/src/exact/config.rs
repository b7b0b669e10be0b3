use crate::error::{Error, Result};
use crate::poly::MAX_COLLISIONS;
use crate::spectral::is_power_of_two;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactConfig {
    pub n: usize,
    /// Sparsity; `None` when unknown (only the estimator accepts that).
    pub k: Option<usize>,
    /// Oversampling divisor: the stride is `N/(μK)`.
    pub mu: usize,
    /// Most collisions decoded per bin, at most 4.
    pub a_max: usize,
    /// A syndrome counts as zero when `|m| ≤ zero_threshold · RMS(x) · d`.
    pub zero_threshold: f64,
    /// Tolerated unrecovered fraction, used only for reporting bounds.
    pub tau: f64,
    /// Explicit initial stride overriding `N/(μK)`.
    pub d: Option<usize>,
}

impl ExactConfig {
    pub fn new(n: usize, k: Option<usize>) -> Self {
        Self {
            n,
            k,
            mu: 4,
            a_max: MAX_COLLISIONS,
            zero_threshold: 1e-9,
            tau: 0.01,
            d: None,
        }
    }

    pub fn with_mu(mut self, mu: usize) -> Self {
        self.mu = mu;
        self
    }

    pub fn with_a_max(mut self, a_max: usize) -> Self {
        self.a_max = a_max;
        self
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || !is_power_of_two(self.n) {
            return Err(Error::InvalidLength(self.n));
        }
        if !(1..=MAX_COLLISIONS).contains(&self.a_max) {
            return Err(Error::Config(format!("a_max {} outside 1..=4", self.a_max)));
        }
        if self.mu == 0 || !is_power_of_two(self.mu) {
            return Err(Error::Config(format!("mu {} is not a power of two", self.mu)));
        }
        if !(self.zero_threshold >= 0.0 && self.zero_threshold.is_finite()) {
            return Err(Error::Config("zero threshold must be finite and non-negative".into()));
        }
        if let Some(d) = self.d {
            if d == 0 || d > self.n || self.n % d != 0 {
                return Err(Error::BadFactor { n: self.n, d });
            }
        }
        Ok(())
    }

    /// `N/(μK)` rounded down to a power of two and clamped to `[1, N]`.
    pub fn initial_d(&self) -> Result<usize> {
        self.validate()?;
        if let Some(d) = self.d {
            return Ok(d);
        }
        let k = self
            .k
            .ok_or_else(|| Error::Config("sparsity K is required".into()))?
            .max(1);
        let ratio = self.n / self.mu.saturating_mul(k).max(1);
        Ok(if ratio == 0 { 1 } else { 1 << ratio.ilog2() })
    }

    pub(crate) fn check_signal(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::LengthMismatch(self.n, len));
        }
        Ok(())
    }
}
