//! Recovery of generally `K`-sparse spectra, where every frequency is
//! nonzero but only `K` are significant.
//!
//! Each bin is treated as a small compressed-sensing problem
//! `y = Φ s` with one column per aliased candidate frequency and one row per
//! randomly drawn shift. [`solve_general`] counts collisions by a global
//! singular-value vote ([`estimate_collisions`]), shrinks `Φ` to the
//! candidates where the noisy locator polynomial is smallest
//! ([`prune_columns`]), and runs [`subspace_pursuit`] on the result.

mod collisions;
mod config;
mod prune;
mod sensing;
mod solve;
mod sp;

pub use collisions::{estimate_collisions, CollisionEstimate, ZERO_VOTE_GUARD};
pub use config::GeneralConfig;
pub use prune::{correlation_columns, prune_columns, PrunedColumns};
pub use sensing::{draw_shifts, mutual_coherence, SensingMatrix};
pub use solve::{solve_general, GeneralSolution};
pub use sp::{subspace_pursuit, SpResult, SP_MAX_ITERATIONS};
