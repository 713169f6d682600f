#![no_main]

use libfuzzer_sys::fuzz_target;
use pcube::BivarPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = BivarPoly::from_json(text) {
        let again = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(BivarPoly::from_json(&again).unwrap(), f);
    }
});
