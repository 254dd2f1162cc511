//! JSON documents for diagrams, Vogan diagrams and verification reports.
//!
//! Every document carries `"schema": "kmss/1"`. Diagram documents list the
//! bonds as `[i, j, mult, arrow]` with arrow codes `0` (none), `1` (from `i`
//! to `j`), `-1` (from `j` to `i`) and `2` (both ways). A Vogan document adds
//! `painted` and `automorphism: {name, map}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cartan::{build_affine_diagram, AffineDiagram, Arrow, Edge, Series};
use crate::involutions::VerificationReport;
use crate::vogan::{automorphism_from_map, make_trivial, make_vogan, VoganDiagram, VoganError};
use crate::SCHEMA;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema violation at line {line}, column {column}: {message}")]
    Shape { line: usize, column: usize, message: String },
    #[error("schema violation at {path}: {message}")]
    Field { path: String, message: String },
    #[error("invalid Vogan diagram: {0}")]
    Vogan(#[from] VoganError),
}

impl IoError {
    fn field(path: impl Into<String>, message: impl Into<String>) -> Self {
        IoError::Field { path: path.into(), message: message.into() }
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        use serde_json::error::Category;
        let (line, column) = (e.line(), e.column());
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(k) => message[..k].to_string(),
            None => message,
        };
        match e.classify() {
            Category::Data => IoError::Shape { line, column, message },
            _ => IoError::Syntax { line, column, message },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomorphismDoc {
    name: String,
    map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    schema: String,
    series: String,
    rank: usize,
    twist: u8,
    edges: Vec<[i64; 4]>,
    marks: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    painted: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    automorphism: Option<AutomorphismDoc>,
}

fn edge_row(e: &Edge) -> [i64; 4] {
    [e.i as i64, e.j as i64, i64::from(e.mult), e.arrow.code()]
}

/// Normalize a bond so that `i < j`, flipping a one-way arrow accordingly.
fn normalized(row: [i64; 4]) -> [i64; 4] {
    let [i, j, m, a] = row;
    if i > j {
        let a = if a == 1 || a == -1 { -a } else { a };
        [j, i, m, a]
    } else {
        row
    }
}

fn diagram_doc(d: &AffineDiagram) -> DiagramDoc {
    DiagramDoc {
        schema: SCHEMA.to_string(),
        series: d.series.to_string(),
        rank: d.rank,
        twist: 1,
        edges: d.edges.iter().map(edge_row).collect(),
        marks: d.marks.clone(),
        painted: None,
        automorphism: None,
    }
}

/// JSON document of an affine diagram.
pub fn diagram_to_json(d: &AffineDiagram) -> String {
    serde_json::to_string_pretty(&diagram_doc(d)).expect("diagram documents serialize")
}

/// JSON document of a Vogan diagram.
pub fn vogan_to_json(vd: &VoganDiagram) -> String {
    let mut doc = diagram_doc(&vd.diagram);
    doc.painted = Some(vd.painted_vec());
    doc.automorphism = Some(AutomorphismDoc { name: vd.automorphism.name.clone(), map: vd.automorphism.map.clone() });
    serde_json::to_string_pretty(&doc).expect("Vogan documents serialize")
}

/// JSON document of a verification report.
pub fn report_to_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(r).expect("reports serialize")
}

fn check_schema(found: &str) -> Result<(), IoError> {
    if found == SCHEMA {
        Ok(())
    } else {
        Err(IoError::field("schema", format!("expected {SCHEMA:?}, found {found:?}")))
    }
}

fn check_diagram(doc: &DiagramDoc) -> Result<AffineDiagram, IoError> {
    check_schema(&doc.schema)?;
    let series: Series = doc.series.parse().map_err(|_| IoError::field("series", format!("unknown series tag {:?}", doc.series)))?;
    if doc.twist != 1 {
        return Err(IoError::field("twist", format!("only untwisted diagrams are supported, found twist {}", doc.twist)));
    }
    let d = build_affine_diagram(series, doc.rank).map_err(|e| IoError::field("rank", e.to_string()))?;
    let nodes = d.node_count() as i64;
    for (k, row) in doc.edges.iter().enumerate() {
        let [i, j, m, a] = *row;
        if !(0..nodes).contains(&i) || !(0..nodes).contains(&j) || i == j {
            return Err(IoError::field(format!("edges[{k}]"), format!("bond ({i}, {j}) does not join two distinct nodes of {nodes}")));
        }
        if !(1..=4).contains(&m) || Arrow::from_code(a).is_none() {
            return Err(IoError::field(format!("edges[{k}]"), format!("multiplicity {m} or arrow code {a} is not valid")));
        }
    }
    let want: BTreeSet<[i64; 4]> = d.edges.iter().map(|e| normalized(edge_row(e))).collect();
    let got: BTreeSet<[i64; 4]> = doc.edges.iter().copied().map(normalized).collect();
    if got.len() != doc.edges.len() {
        return Err(IoError::field("edges", "duplicate bond"));
    }
    if let Some(extra) = got.difference(&want).next() {
        return Err(IoError::field("edges", format!("bond {extra:?} is not part of {series}{}⁽¹⁾", doc.rank)));
    }
    if let Some(missing) = want.difference(&got).next() {
        return Err(IoError::field("edges", format!("bond {missing:?} of {series}{}⁽¹⁾ is missing", doc.rank)));
    }
    if doc.marks != d.marks {
        return Err(IoError::field("marks", format!("expected {:?}, found {:?}", d.marks, doc.marks)));
    }
    Ok(d)
}

fn check_painting(d: &AffineDiagram, doc: &DiagramDoc) -> Result<VoganDiagram, IoError> {
    let painted = doc.painted.clone().unwrap_or_default();
    for (k, &p) in painted.iter().enumerate() {
        if p >= d.node_count() {
            return Err(IoError::field(format!("painted[{k}]"), format!("node {p} is outside the diagram")));
        }
    }
    match &doc.automorphism {
        None => Ok(make_trivial(d, painted)?),
        Some(a) => {
            if a.map.len() != d.node_count() {
                return Err(IoError::field(
                    "automorphism.map",
                    format!("expected {} entries, found {}", d.node_count(), a.map.len()),
                ));
            }
            let aut = automorphism_from_map(d, a.map.clone())?;
            if aut.name != a.name {
                return Err(IoError::field(
                    "automorphism.name",
                    format!("map {:?} is named {:?}, found {:?}", a.map, aut.name, a.name),
                ));
            }
            Ok(make_vogan(d, painted, &aut)?)
        }
    }
}

/// Parse a diagram or Vogan document. A bare diagram becomes the compact
/// (unpainted, trivial automorphism) Vogan diagram.
pub fn parse_diagram(text: &str) -> Result<VoganDiagram, IoError> {
    let doc: DiagramDoc = serde_json::from_str(text)?;
    let d = check_diagram(&doc)?;
    check_painting(&d, &doc)
}

/// Parse a Vogan document; `painted` and `automorphism` are required.
pub fn parse_vogan(text: &str) -> Result<VoganDiagram, IoError> {
    let doc: DiagramDoc = serde_json::from_str(text)?;
    if doc.painted.is_none() {
        return Err(IoError::field("painted", "missing field"));
    }
    if doc.automorphism.is_none() {
        return Err(IoError::field("automorphism", "missing field"));
    }
    let d = check_diagram(&doc)?;
    check_painting(&d, &doc)
}

/// Parse a verification report document.
pub fn parse_report(text: &str) -> Result<VerificationReport, IoError> {
    let r: VerificationReport = serde_json::from_str(text)?;
    check_schema(&r.schema)?;
    if r.k_profile.len() != r.p_profile.len() {
        return Err(IoError::field("p_profile", "length differs from k_profile"));
    }
    Ok(r)
}
