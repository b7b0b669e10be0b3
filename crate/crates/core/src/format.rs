//! On-disk formats.
//!
//! Time-domain signals use a little-endian binary layout: the magic bytes
//! `SFDT`, a `u32` version (currently 1), a `u64` length `N`, then `N`
//! pairs of `f64` (real, imaginary). Sparse spectra are JSON arrays of
//! `{"index", "re", "im"}` objects.

use std::io::{Read, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{is_power_of_two, ComplexSignal, SparseSpectrum, SpectrumEntry};

pub const MAGIC: &[u8; 4] = b"SFDT";
pub const VERSION: u32 = 1;
pub const HEADER_LEN: usize = 16;

pub fn encode_signal(signal: &ComplexSignal) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + 16 * signal.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(signal.len() as u64).to_le_bytes());
    for v in signal.samples() {
        out.extend_from_slice(&v.re.to_le_bytes());
        out.extend_from_slice(&v.im.to_le_bytes());
    }
    out
}

/// Parses a binary signal. The declared length is checked against the
/// buffer size before anything is allocated.
pub fn decode_signal(bytes: &[u8]) -> Result<ComplexSignal> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Format(format!(
            "{} bytes is shorter than the header",
            bytes.len()
        )));
    }
    if &bytes[..4] != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let version = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes"));
    if version != VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }
    let declared = u64::from_le_bytes(bytes[8..16].try_into().expect("8 bytes"));
    let n =
        usize::try_from(declared).map_err(|_| Error::Format(format!("length {declared} does not fit in memory")))?;
    if n < 2 || !is_power_of_two(n) {
        return Err(Error::InvalidLength(n));
    }
    let expected = n
        .checked_mul(16)
        .and_then(|b| b.checked_add(HEADER_LEN))
        .ok_or_else(|| Error::Format(format!("length {n} overflows")))?;
    if bytes.len() != expected {
        return Err(Error::Format(format!(
            "expected {expected} bytes for N = {n}, found {}",
            bytes.len()
        )));
    }
    let samples = bytes[HEADER_LEN..]
        .chunks_exact(16)
        .map(|c| {
            let re = f64::from_le_bytes(c[..8].try_into().expect("8 bytes"));
            let im = f64::from_le_bytes(c[8..].try_into().expect("8 bytes"));
            if re.is_finite() && im.is_finite() {
                Ok(Complex64::new(re, im))
            } else {
                Err(Error::Format("non-finite sample".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexSignal::new(samples)
}

pub fn write_signal<W: Write>(mut w: W, signal: &ComplexSignal) -> std::io::Result<()> {
    w.write_all(&encode_signal(signal))
}

pub fn read_signal<R: Read>(mut r: R) -> Result<ComplexSignal> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes).map_err(|e| Error::Format(e.to_string()))?;
    decode_signal(&bytes)
}

pub fn spectrum_to_json(spectrum: &SparseSpectrum) -> String {
    serde_json::to_string_pretty(&spectrum.to_entries()).expect("entries serialize")
}

/// Parses a JSON spectrum for ambient length `n`.
pub fn parse_spectrum_json(text: &str, n: usize) -> Result<SparseSpectrum> {
    let entries: Vec<SpectrumEntry> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if entries.iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
        return Err(Error::Json("non-finite value".into()));
    }
    SparseSpectrum::from_entries(n, &entries)
}
