#![no_main]

use libfuzzer_sys::fuzz_target;
use randic::poly::{parse_rational, rational_to_string};
use randic::RatPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(text) {
        assert_eq!(parse_rational(&rational_to_string(&q)).unwrap(), q);
    }
    let Ok(value) = serde_json::from_str::<serde_json::Value>(text) else { return };
    if let Ok(p) = RatPoly::from_json(&value) {
        assert_eq!(RatPoly::from_json(&p.to_json()).unwrap(), p);
    }
});
