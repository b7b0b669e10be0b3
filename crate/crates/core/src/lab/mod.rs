//! Test-signal generators, collision census and Monte Carlo grid drivers.
//!
//! Every trial draws from a ChaCha stream seeded with
//! `grid_seed + trial_counter`, so any row of a report can be replayed on
//! its own.

mod census;
mod generate;
mod grid;
mod stats;

pub use census::{run_collision_census, write_census_csv, CensusRow, CollisionCensus};
pub use generate::{
    calibrate_sigma_off, gen_exact, gen_mixture, sigma_off_for_snr, ExactSparseSpec, Mixture, MixtureSpec,
    ValueDistribution,
};
pub use grid::{
    run_exact_grid, run_general_grid, CellSummary, ExactGridSpec, ExactMethod, ExperimentReport, GeneralGridSpec,
    TrialRow,
};
pub use stats::{binomial_floor_holds, binomial_interval, error_ratio, recovery_counts, RecoveryCounts};

/// Seed of trial `counter` within a grid.
#[inline]
pub fn trial_seed(grid_seed: u64, counter: u64) -> u64 {
    grid_seed.wrapping_add(counter)
}

#[cfg(test)]
mod tests;
