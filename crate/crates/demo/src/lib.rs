//! Browser bindings: classify a set, combine two sets, measure their distance.
//! Sets travel as the JSON documents the CLI reads.

use fuzzysoft_core::classify::{is_concave, is_convex, is_fuzzy_soft_number, is_normalized};
use fuzzysoft_core::format::{arith_to_json, parse_set, Precision};
use fuzzysoft_core::metric::distance as set_distance;
use fuzzysoft_core::{arith, ArithOp};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn classify_json(set: &str) -> Result<String, String> {
    let s = parse_set(set).map_err(|e| e.to_string())?;
    let number = is_fuzzy_soft_number(&s);
    let witness = |w: Option<fuzzysoft_core::classify::Violation>| w.map(|w| w.to_string());
    let out = json!({
        "convex": number.convex.verdict,
        "concave": is_concave(&s).verdict,
        "normalized": number.normalized.verdict,
        "number": number.verdict,
        "peak": number.peak.iter().map(|&t| s.universe()[t].clone()).collect::<Vec<_>>(),
        "not_convex": witness(is_convex(&s).witness),
        "not_concave": witness(is_concave(&s).witness),
        "not_normalized": witness(is_normalized(&s).witness),
    });
    Ok(out.to_string())
}

fn arith_json(op: &str, f: &str, g: &str) -> Result<String, String> {
    let op = match op {
        "add" => ArithOp::Add,
        "sub" => ArithOp::Sub,
        "mul" => ArithOp::Mul,
        "div" => ArithOp::Div,
        other => return Err(format!("unknown operation `{other}`")),
    };
    let f = parse_set(f).map_err(|e| e.to_string())?;
    let g = parse_set(g).map_err(|e| e.to_string())?;
    let r = arith::apply(op, &f, &g).map_err(|e| e.to_string())?;
    Ok(arith_to_json(&r, Precision::Fixed(4)))
}

fn distance_of(f: &str, g: &str) -> Result<f64, String> {
    let f = parse_set(f).map_err(|e| e.to_string())?;
    let g = parse_set(g).map_err(|e| e.to_string())?;
    set_distance(&f, &g)
        .map(|d| d.get())
        .map_err(|e| e.to_string())
}

/// Verdicts and witnesses as a JSON object.
#[wasm_bindgen]
pub fn classify(set: &str) -> Result<String, JsError> {
    classify_json(set).map_err(|e| JsError::new(&e))
}

/// `op` is one of `add`, `sub`, `mul`, `div`.
#[wasm_bindgen]
pub fn combine(op: &str, f: &str, g: &str) -> Result<String, JsError> {
    arith_json(op, f, g).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn distance(f: &str, g: &str) -> Result<f64, JsError> {
    distance_of(f, g).map_err(|e| JsError::new(&e))
}
