//! JSON and DOT renderings of statement graphs, optionally annotated with
//! evaluated strengths.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::model::{StatementGraph, StatementId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExportError {
    #[error("strength map has no entry for statement '{id}'")]
    MissingStrength { id: String },
}

#[derive(Serialize)]
#[serde(untagged)]
enum PremiseJson {
    Top(&'static str),
    Literals(Vec<String>),
}

#[derive(Serialize)]
struct StatementJson {
    id: String,
    premise: PremiseJson,
    claim: String,
    weight: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    strength: Option<f64>,
}

#[derive(Serialize)]
struct GraphJson {
    statements: Vec<StatementJson>,
    attacks: Vec<[String; 2]>,
    supports: Vec<[String; 2]>,
}

fn check_strengths(
    graph: &StatementGraph,
    strengths: Option<&BTreeMap<StatementId, f64>>,
) -> Result<(), ExportError> {
    if let Some(map) = strengths {
        for id in graph.ids() {
            if !map.contains_key(id) {
                return Err(ExportError::MissingStrength { id: id.to_string() });
            }
        }
    }
    Ok(())
}

/// Deterministic JSON rendering: statements sorted by id, stable key order,
/// byte-identical across runs for the same inputs.
pub fn export_json(
    graph: &StatementGraph,
    strengths: Option<&BTreeMap<StatementId, f64>>,
) -> Result<String, ExportError> {
    check_strengths(graph, strengths)?;
    let statements = graph
        .statements()
        .map(|st| StatementJson {
            id: st.id().to_string(),
            premise: if st.premise().is_top() {
                PremiseJson::Top("top")
            } else {
                PremiseJson::Literals(st.prem().map(|l| l.to_string()).collect())
            },
            claim: st.claim().to_string(),
            weight: graph.weight(st.id()).expect("weight for every statement"),
            strength: strengths.map(|m| m[st.id()]),
        })
        .collect();
    let edges = |set: &std::collections::BTreeSet<(StatementId, StatementId)>| {
        set.iter()
            .map(|(f, t)| [f.to_string(), t.to_string()])
            .collect::<Vec<_>>()
    };
    let doc = GraphJson {
        statements,
        attacks: edges(graph.attacks()),
        supports: edges(graph.supports()),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    Ok(text)
}

/// Graphviz rendering: support edges carry a green "+", attack edges a red
/// "-". Node labels show id, claim, weight and, when given, strength.
pub fn export_dot(
    graph: &StatementGraph,
    strengths: Option<&BTreeMap<StatementId, f64>>,
) -> Result<String, ExportError> {
    check_strengths(graph, strengths)?;
    let mut out = String::from("digraph statement_graph {\n");
    for st in graph.statements() {
        let weight = graph.weight(st.id()).expect("weight for every statement");
        let mut label = format!("{}\\n{}\\nw={}", st.id(), st.claim(), weight);
        if let Some(map) = strengths {
            label.push_str(&format!("\\ns={}", map[st.id()]));
        }
        out.push_str(&format!("  {} [label=\"{}\"];\n", st.id(), label));
    }
    for (from, to) in graph.supports() {
        out.push_str(&format!("  {from} -> {to} [label=\"+\", color=green];\n"));
    }
    for (from, to) in graph.attacks() {
        out.push_str(&format!("  {from} -> {to} [label=\"-\", color=red];\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
