#![no_main]

use libfuzzer_sys::fuzz_target;
use randic::{parse_edge_list, write_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_edge_list(text) else { return };
    let written = write_edge_list(&g);
    let again = parse_edge_list(&written).expect("written edge list re-parses");
    assert_eq!(again, g);
    assert_eq!(write_edge_list(&again), written);
});
