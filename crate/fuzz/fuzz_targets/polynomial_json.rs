#![no_main]

use libfuzzer_sys::fuzz_target;
use pcube::Polynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = Polynomial::from_json(text) {
        let again = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(Polynomial::from_json(&again).unwrap(), f);
    }
});
