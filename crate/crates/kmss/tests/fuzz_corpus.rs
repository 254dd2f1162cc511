use std::fs;
use std::path::Path;

use kmss::io::{diagram_to_json, parse_diagram, parse_report, parse_vogan, report_to_json, vogan_to_json};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (path.display().to_string(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn diagram_seeds_parse_and_round_trip() {
    for (name, text) in seeds("parse_diagram") {
        let vd = parse_diagram(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_diagram(&diagram_to_json(&vd.diagram)).unwrap(), vd, "{name}");
    }
}

#[test]
fn vogan_seeds_parse_and_round_trip() {
    for (name, text) in seeds("parse_vogan") {
        let vd = parse_vogan(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_vogan(&vogan_to_json(&vd)).unwrap(), vd, "{name}");
    }
}

#[test]
fn report_seeds_parse_and_round_trip() {
    for (name, text) in seeds("parse_report") {
        let r = parse_report(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_report(&report_to_json(&r)).unwrap(), r, "{name}");
    }
}
