//! Abstract gradual semantics over generic weighted bipolar acyclic graphs,
//! and their direct application to statement graphs with statements treated
//! as atomic nodes.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::model::{StatementGraph, StatementId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BipolarError {
    #[error("edge endpoint '{id}' is not a node")]
    UnknownNode { id: String },
    #[error("base score {value} of node '{id}' is outside [0, 1]")]
    BaseOutOfRange { id: String, value: f64 },
    #[error("edge {from} -> {to} is both an attack and a support")]
    OverlappingEdge { from: String, to: String },
    #[error("the graph contains a cycle through '{id}'")]
    CyclicGraph { id: String },
}

/// A node-scoring rule that sees only the node's base score and the already
/// evaluated scores of its direct attackers and supporters. Implementations
/// must map [0,1] inputs into [0,1] and be independent of the order of the
/// score slices.
pub trait AbstractSemantics {
    fn name(&self) -> &'static str;
    fn combine(&self, base: f64, attackers: &[f64], supporters: &[f64]) -> f64;
}

/// Iterated probabilistic sum; the empty sequence gives 0.
pub fn dfquad_aggregate(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |acc, v| acc + v - acc * v)
}

/// Moves the base score towards 0 or 1 by the imbalance between the
/// aggregated attack and support values.
pub fn dfquad_combine(base: f64, against: f64, for_: f64) -> f64 {
    if against >= for_ {
        base - base * (for_ - against).abs()
    } else {
        base + (1.0 - base) * (for_ - against).abs()
    }
}

/// The DF-QuAD semantics.
#[derive(Clone, Copy, Debug, Default)]
pub struct DfQuad;

impl AbstractSemantics for DfQuad {
    fn name(&self) -> &'static str {
        "dfquad"
    }

    fn combine(&self, base: f64, attackers: &[f64], supporters: &[f64]) -> f64 {
        dfquad_combine(
            base,
            dfquad_aggregate(attackers),
            dfquad_aggregate(supporters),
        )
    }
}

/// Saturating influence of an aggregated energy value.
pub fn qem_influence(v: f64) -> f64 {
    let clipped = v.max(0.0);
    clipped * clipped / (1.0 + clipped * clipped)
}

/// Energy-based scoring: supporter scores push up, attacker scores push
/// down, both saturating quadratically.
pub fn qem_combine(base: f64, attackers: &[f64], supporters: &[f64]) -> f64 {
    let energy = supporters.iter().sum::<f64>() - attackers.iter().sum::<f64>();
    base + (1.0 - base) * qem_influence(energy) - base * qem_influence(-energy)
}

/// The QEM semantics in its acyclic form.
#[derive(Clone, Copy, Debug, Default)]
pub struct Qem;

impl AbstractSemantics for Qem {
    fn name(&self) -> &'static str {
        "qem"
    }

    fn combine(&self, base: f64, attackers: &[f64], supporters: &[f64]) -> f64 {
        qem_combine(base, attackers, supporters)
    }
}

/// A weighted bipolar acyclic graph over string node ids.
#[derive(Clone, PartialEq, Debug)]
pub struct BipolarEvalGraph {
    base: BTreeMap<String, f64>,
    attackers: BTreeMap<String, Vec<String>>,
    supporters: BTreeMap<String, Vec<String>>,
    out_edges: BTreeMap<String, Vec<String>>,
}

impl BipolarEvalGraph {
    pub fn build(
        base: BTreeMap<String, f64>,
        attack_edges: &BTreeSet<(String, String)>,
        support_edges: &BTreeSet<(String, String)>,
    ) -> Result<Self, BipolarError> {
        for (id, value) in &base {
            if !(0.0..=1.0).contains(value) {
                return Err(BipolarError::BaseOutOfRange {
                    id: id.clone(),
                    value: *value,
                });
            }
        }
        let mut attackers: BTreeMap<String, Vec<String>> =
            base.keys().map(|id| (id.clone(), Vec::new())).collect();
        let mut supporters = attackers.clone();
        let mut out_edges = attackers.clone();
        for (from, to) in attack_edges.iter().chain(support_edges.iter()) {
            for id in [from, to] {
                if !base.contains_key(id) {
                    return Err(BipolarError::UnknownNode { id: id.clone() });
                }
            }
            if attack_edges.contains(&(from.clone(), to.clone()))
                && support_edges.contains(&(from.clone(), to.clone()))
            {
                return Err(BipolarError::OverlappingEdge {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
        }
        for (from, to) in attack_edges {
            attackers
                .get_mut(to)
                .expect("known node")
                .push(from.clone());
            out_edges
                .get_mut(from)
                .expect("known node")
                .push(to.clone());
        }
        for (from, to) in support_edges {
            supporters
                .get_mut(to)
                .expect("known node")
                .push(from.clone());
            out_edges
                .get_mut(from)
                .expect("known node")
                .push(to.clone());
        }
        let graph = BipolarEvalGraph {
            base,
            attackers,
            supporters,
            out_edges,
        };
        graph.topological_order()?;
        Ok(graph)
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn base_score(&self, id: &str) -> Option<f64> {
        self.base.get(id).copied()
    }

    fn topological_order(&self) -> Result<Vec<&String>, BipolarError> {
        let mut indegree: BTreeMap<&String, usize> = self.base.keys().map(|id| (id, 0)).collect();
        for id in self.base.keys() {
            *indegree.get_mut(id).expect("known node") =
                self.attackers[id].len() + self.supporters[id].len();
        }
        let mut ready: BTreeSet<&String> = indegree
            .iter()
            .filter(|(_, d)| **d == 0)
            .map(|(id, _)| *id)
            .collect();
        let mut order = Vec::with_capacity(self.base.len());
        while let Some(id) = ready.pop_first() {
            order.push(id);
            for succ in &self.out_edges[id] {
                let d = indegree.get_mut(succ).expect("known node");
                *d -= 1;
                if *d == 0 {
                    ready.insert(succ);
                }
            }
        }
        if order.len() != self.base.len() {
            let id = indegree
                .iter()
                .find(|(_, d)| **d > 0)
                .map(|(id, _)| (*id).clone())
                .expect("leftover node on a cycle");
            return Err(BipolarError::CyclicGraph { id });
        }
        Ok(order)
    }

    /// Scores every node in topological order. Each node's score depends
    /// only on its base score and its direct neighbours' scores, which
    /// gives existence and uniqueness on acyclic graphs.
    pub fn eval(
        &self,
        semantics: &dyn AbstractSemantics,
    ) -> Result<BTreeMap<String, f64>, BipolarError> {
        let order = self.topological_order()?;
        let mut scores: BTreeMap<String, f64> = BTreeMap::new();
        for id in order {
            let gather = |ids: &Vec<String>| -> Vec<f64> {
                let mut sorted = ids.clone();
                sorted.sort();
                sorted.iter().map(|n| scores[n]).collect()
            };
            let attackers = gather(&self.attackers[id]);
            let supporters = gather(&self.supporters[id]);
            let score = semantics.combine(self.base[id], &attackers, &supporters);
            scores.insert(id.clone(), score);
        }
        Ok(scores)
    }
}

/// Evaluates an abstract semantics over a bipolar graph.
pub fn eval_abstract(
    graph: &BipolarEvalGraph,
    semantics: &dyn AbstractSemantics,
) -> Result<BTreeMap<String, f64>, BipolarError> {
    graph.eval(semantics)
}

/// Applies an abstract semantics to a statement graph directly: nodes are
/// statements, base scores are the weights, edges are the derived attack
/// and support relations.
pub fn apply_abstract_to_sg(
    graph: &StatementGraph,
    semantics: &dyn AbstractSemantics,
) -> BTreeMap<StatementId, f64> {
    let base: BTreeMap<String, f64> = graph
        .ids()
        .map(|id| (id.to_string(), graph.weight(id).expect("weighted")))
        .collect();
    let stringify = |set: &BTreeSet<(StatementId, StatementId)>| {
        set.iter()
            .map(|(f, t)| (f.to_string(), t.to_string()))
            .collect::<BTreeSet<_>>()
    };
    let bg = BipolarEvalGraph::build(
        base,
        &stringify(graph.attacks()),
        &stringify(graph.supports()),
    )
    .expect("valid statement graphs map to valid bipolar graphs");
    let scores = bg.eval(semantics).expect("statement graphs are acyclic");
    scores
        .into_iter()
        .map(|(id, v)| (StatementId::new(&id).expect("ids round-trip"), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_sg;

    fn node(id: &str, base: f64) -> (String, f64) {
        (id.to_owned(), base)
    }

    fn edge(from: &str, to: &str) -> (String, String) {
        (from.to_owned(), to.to_owned())
    }

    #[test]
    fn isolated_nodes_keep_their_base_score() {
        let bg = BipolarEvalGraph::build(
            BTreeMap::from([node("n", 0.7)]),
            &BTreeSet::new(),
            &BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(bg.eval(&DfQuad).unwrap()["n"], 0.7);
        assert_eq!(bg.eval(&Qem).unwrap()["n"], 0.7);
    }

    #[test]
    fn support_chain_under_dfquad() {
        let bg = BipolarEvalGraph::build(
            BTreeMap::from([node("a", 0.5), node("b", 1.0)]),
            &BTreeSet::new(),
            &BTreeSet::from([edge("b", "a")]),
        )
        .unwrap();
        // c(0.5, 0, 1) = 0.5 + 0.5 * 1
        assert_eq!(bg.eval(&DfQuad).unwrap()["a"], 1.0);
    }

    #[test]
    fn dfquad_operator_base_cases() {
        assert_eq!(dfquad_aggregate(&[]), 0.0);
        assert_eq!(dfquad_aggregate(&[0.5]), 0.5);
        assert!((dfquad_aggregate(&[0.9, 0.6]) - 0.96).abs() < 1e-15);
        assert!((dfquad_combine(0.894, 0.7, 0.9) - 0.9152).abs() < 1e-12);
        for x in [0.0, 0.3, 1.0] {
            assert_eq!(dfquad_combine(0.4, x, x), 0.4);
        }
    }

    #[test]
    fn qem_extreme_pulls() {
        // A single full-strength attacker halves the distance to zero.
        assert!((qem_combine(0.5, &[1.0], &[]) - 0.25).abs() < 1e-12);
        assert!((qem_combine(0.5, &[], &[1.0]) - 0.75).abs() < 1e-12);
        assert_eq!(qem_combine(0.37, &[], &[]), 0.37);
        assert_eq!(qem_influence(0.0), 0.0);
        assert!((qem_influence(1.0) - 0.5).abs() < 1e-15);
        assert_eq!(qem_influence(-2.0), 0.0);
    }

    #[test]
    fn flat_application_to_the_running_example() {
        let g =
            parse_sg("a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7")
                .unwrap();
        let sid = |s: &str| StatementId::new(s).unwrap();
        let d = apply_abstract_to_sg(&g, &DfQuad);
        assert_eq!(d[&sid("a4")], 0.7);
        assert!((d[&sid("a1")] - 0.852).abs() < 1e-12);
        let q = apply_abstract_to_sg(&g, &Qem);
        assert!((q[&sid("a1")] - 0.8780).abs() < 1e-4);
    }

    #[test]
    fn build_validations() {
        let err = BipolarEvalGraph::build(
            BTreeMap::from([node("a", 1.5)]),
            &BTreeSet::new(),
            &BTreeSet::new(),
        );
        assert!(matches!(err, Err(BipolarError::BaseOutOfRange { .. })));
        let err = BipolarEvalGraph::build(
            BTreeMap::from([node("a", 0.5)]),
            &BTreeSet::from([edge("a", "zz")]),
            &BTreeSet::new(),
        );
        assert!(matches!(err, Err(BipolarError::UnknownNode { .. })));
        let err = BipolarEvalGraph::build(
            BTreeMap::from([node("a", 0.5), node("b", 0.5)]),
            &BTreeSet::from([edge("a", "b")]),
            &BTreeSet::from([edge("a", "b")]),
        );
        assert!(matches!(err, Err(BipolarError::OverlappingEdge { .. })));
        let err = BipolarEvalGraph::build(
            BTreeMap::from([node("a", 0.5), node("b", 0.5)]),
            &BTreeSet::from([edge("a", "b")]),
            &BTreeSet::from([edge("b", "a")]),
        );
        assert!(matches!(err, Err(BipolarError::CyclicGraph { .. })));
    }

    #[test]
    fn combine_is_order_independent() {
        let attackers = [0.3, 0.8, 0.1];
        let reversed = [0.1, 0.8, 0.3];
        let supporters = [0.9, 0.2];
        let swapped = [0.2, 0.9];
        for sem in [&DfQuad as &dyn AbstractSemantics, &Qem] {
            let a = sem.combine(0.6, &attackers, &supporters);
            let b = sem.combine(0.6, &reversed, &swapped);
            assert!((a - b).abs() < 1e-12);
        }
    }
}
