#![no_main]

use libfuzzer_sys::fuzz_target;
use sfft_dt::poly::decode_bin;
use sfft_dt::spectral::SyndromeSet;
use sfft_dt::Complex64;

// Layout: a, log2 n, log2 d, bin (u16 le), then (re, im) f64 pairs.
fuzz_target!(|data: &[u8]| {
    if data.len() < 5 {
        return;
    }
    let a = 1 + data[0] as usize % 4;
    let n = 1usize << (1 + data[1] % 20);
    let d = 1usize << (data[2] as u32 % (n.trailing_zeros() + 1));
    let k = u16::from_le_bytes([data[3], data[4]]) as usize % (n / d);
    let values: Vec<Complex64> = data[5..]
        .chunks_exact(16)
        .take(16)
        .map(|c| {
            let re = f64::from_le_bytes(c[..8].try_into().unwrap());
            let im = f64::from_le_bytes(c[8..].try_into().unwrap());
            Complex64::new(re, im)
        })
        .collect();
    let m = SyndromeSet::consecutive(k, values);
    if let Ok(dec) = decode_bin(&m, a, n, d, k) {
        if dec.is_valid() {
            assert_eq!(dec.locations.len(), a);
            assert!(dec.locations.iter().all(|&s| s < n && s % (n / d) == k));
        }
    }
});
