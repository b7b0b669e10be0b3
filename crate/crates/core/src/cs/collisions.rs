use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{singular_values, CMat};
use crate::spectral::SyndromeSet;

/// Bins whose largest singular value is below this fraction of the global
/// RMS syndrome magnitude take no part in the vote.
pub const ZERO_VOTE_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CollisionEstimate {
    /// Estimated collision count per bin.
    pub counts: Vec<usize>,
    /// Descending singular values of each bin's Hankel matrix.
    pub singular_values: Vec<Vec<f64>>,
}

impl CollisionEstimate {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Votes collision counts from Hankel singular values.
///
/// Each bin contributes the `a_max` singular values of its
/// `a_max × a_max` Hankel matrix over `m_0..m_{2a_max-2}`. The `K` largest
/// values over all bins (ties to the lower bin) each add one collision to
/// their bin. Bins caught by [`ZERO_VOTE_GUARD`] get none, so the total is
/// `K` unless fewer values survive the guard.
pub fn estimate_collisions(syndromes: &[SyndromeSet], k: usize, a_max: usize) -> Result<CollisionEstimate> {
    let needed = 2 * a_max - 1;
    for syn in syndromes {
        if syn.len() < needed || syn.shifts.iter().take(needed).enumerate().any(|(j, &l)| j != l) {
            return Err(Error::Config(format!(
                "bin {} needs syndromes at shifts 0..{needed}",
                syn.bin
            )));
        }
    }
    let singular: Vec<Vec<f64>> = syndromes
        .par_iter()
        .with_min_len(64)
        .map(|syn| singular_values(&CMat::hankel(&syn.values[..needed], a_max)))
        .collect();

    let count = syndromes.len() * needed;
    let energy: f64 = syndromes
        .iter()
        .flat_map(|s| s.values[..needed].iter())
        .map(|v| v.norm_sqr())
        .sum();
    let rms = if count == 0 {
        0.0
    } else {
        (energy / count as f64).sqrt()
    };
    let guard = ZERO_VOTE_GUARD * rms;

    let mut pool: Vec<(f64, usize)> = singular
        .iter()
        .enumerate()
        .filter(|(_, sv)| sv.first().is_some_and(|&s1| s1 >= guard && s1 > 0.0))
        .flat_map(|(bin, sv)| sv.iter().map(move |&s| (s, bin)))
        .collect();
    let take = k.min(pool.len());
    let by_vote = |a: &(f64, usize), b: &(f64, usize)| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1));
    if take < pool.len() && take > 0 {
        pool.select_nth_unstable_by(take - 1, by_vote);
    }
    let mut counts = vec![0; syndromes.len()];
    for &(_, bin) in &pool[..take] {
        counts[bin] += 1;
    }
    Ok(CollisionEstimate {
        counts,
        singular_values: singular,
    })
}
