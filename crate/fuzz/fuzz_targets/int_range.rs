#![no_main]

use libfuzzer_sys::fuzz_target;
use pcube::verify::IntRange;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = text.parse::<IntRange>() {
        assert_eq!(r.to_string().parse::<IntRange>().unwrap(), r);
    }
});
