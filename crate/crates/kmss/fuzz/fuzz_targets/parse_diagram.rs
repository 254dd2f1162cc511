#![no_main]

use kmss::io::{parse_diagram, vogan_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(vd) = parse_diagram(text) {
        let again = parse_diagram(&vogan_to_json(&vd)).expect("emitted documents parse");
        assert_eq!(again, vd);
    }
});
