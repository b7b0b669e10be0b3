use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;

use super::trial_seed;
use crate::error::{Error, Result};

/// Empirical distribution of per-bin collision counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollisionCensus {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub trials: usize,
    pub seed: u64,
    /// `histogram[a]` counts bins holding exactly `a` frequencies.
    pub histogram: Vec<u64>,
    /// Trials in which some bin held more than `a` frequencies, indexed
    /// by `a`.
    pub trials_exceeding: Vec<u64>,
}

impl CollisionCensus {
    /// `N⁺ = N/(dK)`.
    pub fn n_plus(&self) -> f64 {
        self.n as f64 / (self.d * self.k) as f64
    }

    pub fn bins_observed(&self) -> u64 {
        self.histogram.iter().sum()
    }

    /// Fraction of bins holding exactly `a` frequencies.
    pub fn probability(&self, a: usize) -> f64 {
        self.histogram.get(a).copied().unwrap_or(0) as f64 / self.bins_observed() as f64
    }

    /// Fraction of bins holding more than `a` frequencies.
    pub fn tail(&self, a: usize) -> f64 {
        let above: u64 = self.histogram.iter().skip(a + 1).sum();
        above as f64 / self.bins_observed() as f64
    }

    /// Fraction of trials with at least one bin above `a`.
    pub fn trial_tail(&self, a: usize) -> f64 {
        self.trials_exceeding.get(a).copied().unwrap_or(0) as f64 / self.trials as f64
    }
}

/// Places `K` frequencies uniformly at random per trial and counts how many
/// fall into each of the `N/d` bins.
pub fn run_collision_census(n: usize, k: usize, d: usize, trials: usize, seed: u64) -> Result<CollisionCensus> {
    if d == 0 || n % d != 0 {
        return Err(Error::BadFactor { n, d });
    }
    if k > n {
        return Err(Error::Config(format!("K = {k} exceeds N = {n}")));
    }
    let bins = n / d;
    let per_trial: Vec<Vec<u64>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t as u64));
            let mut load = vec![0usize; bins];
            for s in sample(&mut rng, n, k) {
                load[s % bins] += 1;
            }
            let mut hist = vec![0u64; d + 1];
            for a in load {
                hist[a] += 1;
            }
            hist
        })
        .collect();
    let mut histogram = vec![0u64; d + 1];
    let mut trials_exceeding = vec![0u64; d + 1];
    for hist in &per_trial {
        let top = hist.iter().rposition(|&c| c > 0).unwrap_or(0);
        for (a, c) in hist.iter().enumerate() {
            histogram[a] += c;
        }
        for slot in trials_exceeding.iter_mut().take(top) {
            *slot += 1;
        }
    }
    Ok(CollisionCensus {
        n,
        k,
        d,
        trials,
        seed,
        histogram,
        trials_exceeding,
    })
}

/// One CSV row of a census: the share of bins holding exactly `a`
/// frequencies and the tails above `a`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub n_plus: f64,
    pub trials: usize,
    pub a: usize,
    pub bins: u64,
    pub probability: f64,
    pub tail: f64,
    pub trial_tail: f64,
}

impl CollisionCensus {
    /// Rows for `a = 0` up to the largest count observed.
    pub fn rows(&self) -> Vec<CensusRow> {
        let top = self.histogram.iter().rposition(|&c| c > 0).unwrap_or(0);
        (0..=top)
            .map(|a| CensusRow {
                n: self.n,
                k: self.k,
                d: self.d,
                n_plus: self.n_plus(),
                trials: self.trials,
                a,
                bins: self.histogram[a],
                probability: self.probability(a),
                tail: self.tail(a),
                trial_tail: self.trial_tail(a),
            })
            .collect()
    }
}

/// Writes every census as CSV rows under one header.
pub fn write_census_csv<W: Write>(censuses: &[CollisionCensus], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for row in censuses.iter().flat_map(|c| c.rows()) {
        out.serialize(row).map_err(|e| Error::Format(e.to_string()))?;
    }
    out.flush().map_err(|e| Error::Format(e.to_string()))
}
