#![no_main]

use libfuzzer_sys::fuzz_target;
use sfft_dt::format::{decode_signal, encode_signal, read_signal};

fuzz_target!(|data: &[u8]| {
    let decoded = decode_signal(data);
    assert_eq!(decoded, read_signal(data));
    if let Ok(signal) = decoded {
        // Anything accepted must re-encode to the same bytes.
        assert_eq!(encode_signal(&signal), data);
    }
});
