//! JSON interchange.
//!
//! A set document looks like
//!
//! ```json
//! {
//!   "universe": ["h1", "h2"],
//!   "parameters": ["e1"],
//!   "memberships": [
//!     [0.0, 0.6]
//!   ]
//! }
//! ```
//!
//! Arithmetic results add a `defined` mask and write `null` for undefined
//! cells. Mapping documents carry the source and target label lists plus the
//! `p` (objects) and `q` (parameters) label tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::analysis::MappingSpec;
use crate::arith::ArithResult;
use crate::error::{Error, Result};
use crate::set::{FuzzySoftSet, Labels};

/// How numbers are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    /// Shortest text that round-trips (`0.6`, `1.0`).
    Shortest,
    /// Fixed number of decimals (`0.6000`).
    Fixed(usize),
}

/// Decimal places used by the command-line front end.
pub const CLI_PRECISION: Precision = Precision::Fixed(4);

impl Precision {
    pub fn number(self, v: f64) -> String {
        match self {
            Precision::Shortest => format!("{v:?}"),
            Precision::Fixed(d) => format!("{v:.d$}"),
        }
    }
}

#[derive(Deserialize)]
struct SetDocument {
    universe: Vec<String>,
    parameters: Vec<String>,
    memberships: Vec<Vec<f64>>,
}

pub fn parse_set(text: &str) -> Result<FuzzySoftSet> {
    let doc: SetDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    FuzzySoftSet::new(doc.universe, doc.parameters, doc.memberships)
}

fn label_list(labels: &[String]) -> String {
    let items: Vec<String> = labels
        .iter()
        .map(|l| serde_json::to_string(l).expect("strings always serialize"))
        .collect();
    format!("[{}]", items.join(", "))
}

fn write_rows<'a>(out: &mut String, rows: impl Iterator<Item = Vec<String>> + 'a) {
    let rows: Vec<String> = rows.map(|r| format!("    [{}]", r.join(", "))).collect();
    out.push_str(&rows.join(",\n"));
    out.push('\n');
}

pub fn set_to_json(set: &FuzzySoftSet, precision: Precision) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"universe\": {},", label_list(set.universe())).unwrap();
    writeln!(out, "  \"parameters\": {},", label_list(set.parameters())).unwrap();
    writeln!(out, "  \"memberships\": [").unwrap();
    write_rows(
        &mut out,
        set.rows()
            .map(|row| row.iter().map(|&v| precision.number(v)).collect()),
    );
    writeln!(out, "  ]").unwrap();
    out.push_str("}\n");
    out
}

pub fn arith_to_json(result: &ArithResult, precision: Precision) -> String {
    let mut out = String::new();
    let m = result.universe().len();
    let n = result.parameters().len();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"universe\": {},", label_list(result.universe())).unwrap();
    writeln!(
        out,
        "  \"parameters\": {},",
        label_list(result.parameters())
    )
    .unwrap();
    writeln!(out, "  \"memberships\": [").unwrap();
    write_rows(
        &mut out,
        (0..n).map(|i| {
            (0..m)
                .map(|t| match result.value(i, t) {
                    Some(v) => precision.number(v),
                    None => "null".to_string(),
                })
                .collect()
        }),
    );
    writeln!(out, "  ],").unwrap();
    writeln!(out, "  \"defined\": [").unwrap();
    write_rows(
        &mut out,
        (0..n).map(|i| {
            (0..m)
                .map(|t| result.is_defined(i, t).to_string())
                .collect()
        }),
    );
    writeln!(out, "  ]").unwrap();
    out.push_str("}\n");
    out
}

#[derive(Deserialize)]
struct ArithDocument {
    universe: Vec<String>,
    parameters: Vec<String>,
    memberships: Vec<Vec<Option<f64>>>,
    defined: Vec<Vec<bool>>,
}

/// Reads an arithmetic result document. `null` cells and `false` mask
/// entries must agree.
pub fn parse_arith(text: &str) -> Result<ArithResult> {
    let doc: ArithDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    if doc.defined.len() != doc.memberships.len() {
        return Err(Error::Malformed(
            "mask and grid have different row counts".into(),
        ));
    }
    let mut cells = Vec::new();
    for (row, mask) in doc.memberships.iter().zip(&doc.defined) {
        if row.len() != mask.len() {
            return Err(Error::Malformed(
                "mask and grid rows differ in length".into(),
            ));
        }
        for (v, d) in row.iter().zip(mask) {
            if v.is_some() != *d {
                return Err(Error::Malformed("mask disagrees with null cells".into()));
            }
        }
        cells.push(row.clone());
    }
    ArithResult::new(doc.universe, doc.parameters, cells)
}

#[derive(Deserialize)]
struct MappingDocument {
    source_universe: Vec<String>,
    source_parameters: Vec<String>,
    target_universe: Vec<String>,
    target_parameters: Vec<String>,
    p: BTreeMap<String, String>,
    q: BTreeMap<String, String>,
}

pub fn parse_mapping(text: &str) -> Result<MappingSpec> {
    let doc: MappingDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    MappingSpec::new(
        doc.source_universe,
        doc.source_parameters,
        doc.target_universe,
        doc.target_parameters,
        &doc.p,
        &doc.q,
    )
}

fn table(keys: &Labels, values: impl Fn(usize) -> String) -> String {
    let items: Vec<String> = keys
        .iter()
        .enumerate()
        .map(|(k, key)| {
            format!(
                "{}: {}",
                serde_json::to_string(key).unwrap(),
                serde_json::to_string(&values(k)).unwrap()
            )
        })
        .collect();
    format!("{{{}}}", items.join(", "))
}

pub fn mapping_to_json(f: &MappingSpec) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(
        out,
        "  \"source_universe\": {},",
        label_list(f.source_universe())
    )
    .unwrap();
    writeln!(
        out,
        "  \"source_parameters\": {},",
        label_list(f.source_parameters())
    )
    .unwrap();
    writeln!(
        out,
        "  \"target_universe\": {},",
        label_list(f.target_universe())
    )
    .unwrap();
    writeln!(
        out,
        "  \"target_parameters\": {},",
        label_list(f.target_parameters())
    )
    .unwrap();
    writeln!(
        out,
        "  \"p\": {},",
        table(f.source_universe(), |s| f.target_universe()
            [f.object_image(s)]
        .clone())
    )
    .unwrap();
    writeln!(
        out,
        "  \"q\": {}",
        table(f.source_parameters(), |a| f.target_parameters()
            [f.parameter_image(a)]
        .clone())
    )
    .unwrap();
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_problem_document() {
        let text = r#"{
            "universe": ["h1","h2","h3","h4","h5"],
            "parameters": ["e1","e2"],
            "memberships": [[0.0,0.6,1.0,0.8,0.1],[0.1,0.7,1.0,0.8,0.0]]
        }"#;
        let set = parse_set(text).unwrap();
        assert_eq!(set, fixtures::f_a());
    }

    #[test]
    fn minimal_and_invalid_documents() {
        let one =
            parse_set(r#"{"universe":["h1"],"parameters":["e1"],"memberships":[[0]]}"#).unwrap();
        assert_eq!(one.cells(), &[0.0]);
        let bad = parse_set(r#"{"universe":["h1"],"parameters":["e1"],"memberships":[[1.2]]}"#);
        assert!(matches!(bad, Err(Error::MembershipOutOfRange { .. })));
        let ragged =
            parse_set(r#"{"universe":["h1","h2"],"parameters":["e1"],"memberships":[[0.1]]}"#);
        assert!(matches!(ragged, Err(Error::RaggedRow { .. })));
        let dup =
            parse_set(r#"{"universe":["h1"],"parameters":["e1","e1"],"memberships":[[0],[0]]}"#);
        assert!(matches!(dup, Err(Error::DuplicateLabel { .. })));
        assert!(matches!(parse_set("{"), Err(Error::Malformed(_))));
    }

    #[test]
    fn shortest_output_matches_table_text() {
        let text = set_to_json(&fixtures::f_a(), Precision::Shortest);
        assert!(text.contains("[0.0, 0.6, 1.0, 0.8, 0.1]"), "{text}");
        assert_eq!(parse_set(&text).unwrap(), fixtures::f_a());
    }

    #[test]
    fn fixed_precision_output() {
        let text = set_to_json(&fixtures::g_a(), CLI_PRECISION);
        assert!(
            text.contains("[0.1000, 0.8000, 1.0000, 0.6000, 0.0000]"),
            "{text}"
        );
    }

    #[test]
    fn mapping_round_trip() {
        let f = fixtures::map_problem_4_22();
        let back = parse_mapping(&mapping_to_json(&f)).unwrap();
        assert_eq!(back, f);
    }
}
