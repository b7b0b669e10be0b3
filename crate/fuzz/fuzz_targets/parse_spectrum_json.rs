#![no_main]

use libfuzzer_sys::fuzz_target;
use sfft_dt::format::{parse_spectrum_json, spectrum_to_json};

fuzz_target!(|data: &[u8]| {
    let Some((&exp, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = 1usize << (exp % 24);
    if let Ok(spectrum) = parse_spectrum_json(text, n) {
        assert!(spectrum.indices().all(|i| i < n));
        let again = parse_spectrum_json(&spectrum_to_json(&spectrum), n).unwrap();
        assert_eq!(again, spectrum);
    }
});
