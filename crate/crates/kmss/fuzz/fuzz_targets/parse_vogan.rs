#![no_main]

use kmss::io::{parse_vogan, vogan_to_json};
use kmss::vogan::reduce_borel_siebenthal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(vd) = parse_vogan(text) {
        assert_eq!(parse_vogan(&vogan_to_json(&vd)).as_ref(), Ok(&vd));
        if vd.diagram.node_count() <= 6 {
            let r = reduce_borel_siebenthal(&vd).expect("small diagrams reduce");
            assert!(r.painted.len() <= 2);
        }
    }
});
