#![no_main]

use libfuzzer_sys::fuzz_target;
use randic_cli::parse_sweep_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(range) = parse_sweep_range(text) {
        assert!(range.start() <= range.end());
        let shown = format!("{}..{}", range.start(), range.end());
        assert_eq!(parse_sweep_range(&shown).unwrap(), range);
    }
});
