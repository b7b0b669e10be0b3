//! Solvers for exactly `K`-sparse spectra.
//!
//! [`solve_noniterative`] reads `2·a_max` shifted views at one stride and
//! decodes every active bin. [`solve_iterative`] reads two new views per
//! pass, subtracts what is already solved, and doubles the stride between
//! passes so that pass `l` can decode bins with up to `l + 1` collisions.
//! [`estimate_sparsity_and_solve`] needs no `K`: it starts at `d = N` and
//! halves the stride until every bin decodes.

mod bank;
pub mod bounds;
mod config;
mod estimate;
mod iterative;
mod noniterative;

use serde::Serialize;

pub use config::ExactConfig;
pub use estimate::{estimate_sparsity_and_solve, SparsityEstimate};
pub use iterative::solve_iterative;
pub use noniterative::solve_noniterative;

use crate::spectral::SparseSpectrum;

/// What happened in one pass over the bins.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct IterationTrace {
    pub iteration: usize,
    pub d: usize,
    /// Bins with a nonzero syndrome or carried over as deferred.
    pub active_bins: usize,
    pub bins_attempted: usize,
    pub bins_solved: usize,
    /// Bins left in the deferred set after this pass.
    pub bins_deferred: usize,
    /// Shifted views transformed in this pass.
    pub syndromes_computed: usize,
    /// Samples fed to FFTs in this pass.
    pub fft_samples: usize,
    /// Frequency indices accepted in this pass.
    pub solved: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SolverTrace {
    pub iterations: Vec<IterationTrace>,
    pub total_fft_samples: usize,
    pub final_d: usize,
    /// Bins (at the final stride) that never decoded.
    pub unresolved_bins: Vec<usize>,
    pub warnings: Vec<String>,
}

impl SolverTrace {
    pub fn fully_solved(&self) -> bool {
        self.unresolved_bins.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    pub spectrum: SparseSpectrum,
    pub trace: SolverTrace,
}

impl ExactSolution {
    pub fn fully_solved(&self) -> bool {
        self.trace.fully_solved()
    }
}

#[cfg(test)]
mod tests;
