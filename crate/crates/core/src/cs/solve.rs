use num_complex::Complex64;
use rayon::prelude::*;

use super::{
    draw_shifts, estimate_collisions, prune_columns, subspace_pursuit, CollisionEstimate, GeneralConfig, SensingMatrix,
};
use crate::error::{Error, Result};
use crate::spectral::{downsample, transform_view, ComplexSignal, SparseSpectrum, SyndromeSet, ViewSpectrum};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralSolution {
    pub spectrum: SparseSpectrum,
    pub collisions: CollisionEstimate,
    pub d: usize,
    /// Random shifts shared by every bin's sensing matrix.
    pub shifts: Vec<usize>,
    /// Bins whose pruning fell back to correlation ranking.
    pub fallback_bins: usize,
    pub dropped_columns: usize,
    pub fft_samples: usize,
}

/// Shifts for the sensing rows. When the stride is smaller than the number
/// of rows, distinct shifts are drawn from a wider range instead.
fn sensing_shifts(n: usize, d: usize, r: usize, seed: u64) -> Result<Vec<usize>> {
    if r <= d {
        draw_shifts(d, r, seed)
    } else {
        let r = r.min(n);
        draw_shifts(d.max(r), r, seed)
    }
}

fn views(x: &[Complex64], d: usize, shifts: &[usize]) -> Result<Vec<ViewSpectrum>> {
    shifts.iter().map(|&s| transform_view(downsample(x, d, s)?)).collect()
}

struct BinResult {
    entries: Vec<(usize, Complex64)>,
    fallback: bool,
    dropped: usize,
}

/// Recovers the significant part of a generally sparse spectrum.
pub fn solve_general(x: &ComplexSignal, cfg: &GeneralConfig) -> Result<GeneralSolution> {
    let n = x.len();
    if n != cfg.n {
        return Err(Error::LengthMismatch(cfg.n, n));
    }
    let d = cfg.stride()?;
    let bins = n / d;
    let shifts = sensing_shifts(n, d, cfg.r(), cfg.seed)?;
    let rand_views = views(x.samples(), d, &shifts)?;

    // Without pruning there is no collision vote either: every bin runs
    // subspace pursuit at the assumed maximum over all its candidates.
    let (syndromes, collisions, cons_len) = if cfg.prune {
        let consecutive: Vec<usize> = (0..2 * cfg.a_max).collect();
        let cons_views = views(x.samples(), d, &consecutive)?;
        let syndromes: Vec<SyndromeSet> = (0..bins)
            .map(|k| SyndromeSet::consecutive(k, cons_views.iter().map(|v| v.bins[k]).collect()))
            .collect();
        let collisions = estimate_collisions(&syndromes, cfg.k, cfg.a_max)?;
        (syndromes, collisions, cons_views.len())
    } else {
        let collisions = CollisionEstimate {
            counts: vec![cfg.a_max.min(d); bins],
            singular_values: vec![Vec::new(); bins],
        };
        (Vec::new(), collisions, 0)
    };
    let fft_samples = (cons_len + rand_views.len()) * bins;

    let active: Vec<usize> = (0..bins).filter(|&k| collisions.counts[k] > 0).collect();
    let results: Vec<BinResult> = active
        .par_iter()
        .with_min_len(16)
        .map(|&k| {
            let a = collisions.counts[k];
            let y: Vec<Complex64> = rand_views.iter().map(|v| v.bins[k]).collect();
            let full = SensingMatrix::for_bin(n, d, k, &shifts);
            let (phi, fallback) = if cfg.prune {
                let pruned = prune_columns(&syndromes[k], a, &full, &y, cfg.keep_per_collision, n);
                (full.select(&pruned.columns), pruned.fallback)
            } else {
                (full, false)
            };
            let sp = subspace_pursuit(&y, &phi.matrix, a);
            let entries = sp
                .support
                .iter()
                .map(|&t| (phi.column_locations[t], sp.coeffs[t]))
                .filter(|(_, v)| v.norm() > 0.0)
                .collect();
            BinResult {
                entries,
                fallback,
                dropped: sp.dropped_columns,
            }
        })
        .collect();

    let mut spectrum = SparseSpectrum::new(n);
    let mut fallback_bins = 0;
    let mut dropped_columns = 0;
    for r in results {
        fallback_bins += r.fallback as usize;
        dropped_columns += r.dropped;
        for (s, v) in r.entries {
            spectrum.insert(s, v)?;
        }
    }
    Ok(GeneralSolution {
        spectrum,
        collisions,
        d,
        shifts,
        fallback_bins,
        dropped_columns,
        fft_samples,
    })
}
