//! Sparse Fourier transform by downsampling in time.
//!
//! A length-`N` signal is read at stride `d` and a handful of small shifts.
//! Each length-`N/d` DFT bin then holds the sum of the `d` original
//! frequencies that alias onto it, weighted by powers of their unit-circle
//! roots. Those bin values behave like syndromes of a complex BCH code:
//!
//! * [`exact`] recovers exactly `K`-sparse spectra by syndrome decoding each
//!   bin (closed-form roots for up to four collisions, see [`poly`]), either
//!   at a fixed stride or iteratively with the stride doubled per pass.
//! * [`cs`] handles generally `K`-sparse spectra: it votes collision counts
//!   from Hankel singular values, prunes candidate roots by evaluating the
//!   noisy locator polynomial, and runs subspace pursuit on what is left.
//! * [`lab`] generates test signals and drives Monte Carlo experiments.
//!
//! DFT conventions are fixed in [`spectral`]: analysis carries `1/N`,
//! synthesis is the plain sum, so a bin value for shift `l` is exactly
//! `Σ_t x̂[k + tN/d] · e^{i2π(k + tN/d)l/N}`.

// Tolerance checks are written `!(x > tol)` on purpose so NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cs;
pub mod error;
pub mod exact;
pub mod format;
pub mod lab;
pub mod linalg;
pub mod poly;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use spectral::{ComplexSignal, SparseSpectrum};
