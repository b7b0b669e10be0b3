#![no_main]

use libfuzzer_sys::fuzz_target;
use sfft_dt::poly::{roots_closed_form, PolyCoefficients};
use sfft_dt::Complex64;

// Up to four (re, im) f64 pairs: c_0 .. c_{a-1} of a monic polynomial.
fuzz_target!(|data: &[u8]| {
    let c: Vec<Complex64> = data
        .chunks_exact(16)
        .take(4)
        .map(|c| {
            let re = f64::from_le_bytes(c[..8].try_into().unwrap());
            let im = f64::from_le_bytes(c[8..].try_into().unwrap());
            Complex64::new(re, im)
        })
        .collect();
    if c.is_empty() {
        return;
    }
    let degree = c.len();
    if let Ok(roots) = roots_closed_form(&PolyCoefficients { c }) {
        assert_eq!(roots.len(), degree);
        assert!(roots.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
    }
});
