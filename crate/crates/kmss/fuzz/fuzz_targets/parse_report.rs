#![no_main]

use kmss::io::{parse_report, report_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_report(text) {
        assert_eq!(parse_report(&report_to_json(&r)).as_ref(), Ok(&r));
    }
});
