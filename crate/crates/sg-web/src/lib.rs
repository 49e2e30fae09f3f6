//! Browser bindings for the statement graph engine. Three operations back
//! the demo page: strength evaluation, completeness classification and DOT
//! rendering, all over the text format and plain strings.

use wasm_bindgen::prelude::*;

use sg_core::cst::classify_completeness;
use sg_core::export::{export_dot, export_json};
use sg_core::parse::parse_sg;
use sg_core::{Semantics, StatementGraph};

fn load(source: &str) -> Result<StatementGraph, String> {
    parse_sg(source).map_err(|errors| {
        errors
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    })
}

fn semantics(name: &str) -> Result<Semantics, String> {
    Semantics::from_name(name).ok_or_else(|| format!("unknown semantics '{name}'"))
}

pub fn evaluate_impl(source: &str, semantics_name: &str) -> Result<String, String> {
    let graph = load(source)?;
    let chosen = semantics(semantics_name)?;
    let strengths = chosen.evaluate(&graph).map_err(|e| e.to_string())?;
    export_json(&graph, Some(&strengths)).map_err(|e| e.to_string())
}

pub fn classify_impl(source: &str) -> Result<String, String> {
    let graph = load(source)?;
    let mut out = String::new();
    for id in graph.ids() {
        let verdict = classify_completeness(&graph, id).map_err(|e| e.to_string())?;
        out.push_str(&format!("{id} {verdict}\n"));
    }
    Ok(out)
}

pub fn to_dot_impl(source: &str, semantics_name: Option<&str>) -> Result<String, String> {
    let graph = load(source)?;
    let strengths = match semantics_name {
        Some(name) if !name.is_empty() => Some(
            semantics(name)?
                .evaluate(&graph)
                .map_err(|e| e.to_string())?,
        ),
        _ => None,
    };
    export_dot(&graph, strengths.as_ref()).map_err(|e| e.to_string())
}

/// Strengths of every statement under the chosen semantics, as JSON.
#[wasm_bindgen]
pub fn evaluate(source: &str, semantics_name: &str) -> Result<String, JsValue> {
    evaluate_impl(source, semantics_name).map_err(|e| JsValue::from_str(&e))
}

/// Per-statement completeness classification, one line each.
#[wasm_bindgen]
pub fn classify(source: &str) -> Result<String, JsValue> {
    classify_impl(source).map_err(|e| JsValue::from_str(&e))
}

/// Graphviz rendering, optionally annotated with strengths.
#[wasm_bindgen]
pub fn to_dot(source: &str, semantics_name: Option<String>) -> Result<String, JsValue> {
    to_dot_impl(source, semantics_name.as_deref()).map_err(|e| JsValue::from_str(&e))
}

/// The selectable semantics names, comma separated.
#[wasm_bindgen]
pub fn semantics_names() -> String {
    Semantics::ALL
        .iter()
        .map(|s| s.name())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG: &str = "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7";

    #[test]
    fn evaluation_returns_annotated_json() {
        let json = evaluate_impl(FIG, "dc-dfquad").unwrap();
        assert!(json.contains("\"strength\""));
        assert!(evaluate_impl(FIG, "bogus").is_err());
        assert!(evaluate_impl("x: a & ~a => b @ 1", "qem")
            .unwrap_err()
            .contains("1:4"));
    }

    #[test]
    fn classification_lists_every_statement() {
        let text = classify_impl(FIG).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("a4 incomplete"));
    }

    #[test]
    fn dot_rendering_accepts_an_optional_semantics() {
        let plain = to_dot_impl(FIG, None).unwrap();
        assert!(plain.contains("a4 -> a1 [label=\"-\""));
        let annotated = to_dot_impl(FIG, Some("tnorm-p")).unwrap();
        assert!(annotated.contains("s="));
    }

    #[test]
    fn names_cover_all_semantics() {
        assert_eq!(semantics_names().split(',').count(), 6);
    }
}
