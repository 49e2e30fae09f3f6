//! Independent oracles used by the integration and acceptance suites.
//!
//! These re-derive results straight from the definitions with the dumbest
//! possible machinery (exhaustive subsets, pairwise scans) and never call
//! the production enumeration or evaluation paths they are checking.

// Shared by several test targets; not every target uses every oracle.
#![allow(dead_code)]
#![allow(clippy::type_complexity)]

use std::collections::{BTreeMap, BTreeSet};

use sg_core::{Statement, StatementGraph, StatementId};

/// Pairwise relation derivation: `a` supports `b` iff a's claim occurs in
/// b's premise, attacks iff its negation does.
pub fn oracle_relations(
    statements: &[&Statement],
) -> (
    BTreeSet<(StatementId, StatementId)>,
    BTreeSet<(StatementId, StatementId)>,
) {
    let mut attacks = BTreeSet::new();
    let mut supports = BTreeSet::new();
    for a in statements {
        for b in statements {
            if a.id() == b.id() {
                continue;
            }
            for x in b.prem() {
                if a.claim() == x {
                    supports.insert((a.id().clone(), b.id().clone()));
                }
                if a.claim().negate().ok().as_ref() == Some(x) {
                    attacks.insert((a.id().clone(), b.id().clone()));
                }
            }
        }
    }
    (attacks, supports)
}

/// All complete support trees of `root` by checking every subset of the
/// statements against the four defining conditions: membership, closure,
/// conflict-freeness, minimality.
pub fn oracle_csts(graph: &StatementGraph, root: &StatementId) -> BTreeSet<BTreeSet<StatementId>> {
    let ids: Vec<&StatementId> = graph.ids().collect();
    assert!(ids.len() <= 20, "oracle is exponential");
    let mut grounded: Vec<BTreeSet<StatementId>> = Vec::new();
    for mask in 0u32..(1 << ids.len()) {
        let set: BTreeSet<StatementId> = ids
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, id)| (*id).clone())
            .collect();
        if !set.contains(root) {
            continue;
        }
        let closed = set.iter().all(|m| {
            graph
                .statement(m)
                .expect("subset of the graph")
                .prem()
                .all(|x| {
                    set.iter()
                        .any(|s| graph.statement(s).expect("subset").claim() == x)
                })
        });
        if !closed {
            continue;
        }
        let conflicted = set.iter().any(|a| {
            set.iter()
                .any(|b| graph.attacks().contains(&(a.clone(), b.clone())))
        });
        if conflicted {
            continue;
        }
        grounded.push(set);
    }
    grounded
        .iter()
        .filter(|set| {
            !grounded
                .iter()
                .any(|other| *other != **set && other.is_subset(set))
        })
        .cloned()
        .collect()
}

/// Support-tree strengths computed straight from the defining equations
/// over the oracle's tree sets.
pub fn oracle_tnorm(
    graph: &StatementGraph,
    tnorm: fn(f64, f64) -> f64,
    tconorm: fn(f64, f64) -> f64,
    negation: fn(f64) -> f64,
) -> BTreeMap<StatementId, f64> {
    let trees_by_root: BTreeMap<StatementId, BTreeSet<BTreeSet<StatementId>>> = graph
        .ids()
        .map(|id| (id.clone(), oracle_csts(graph, id)))
        .collect();
    let mut all_trees: Vec<(StatementId, BTreeSet<StatementId>)> = Vec::new();
    for (root, trees) in &trees_by_root {
        for tree in trees {
            all_trees.push((root.clone(), tree.clone()));
        }
    }
    all_trees.sort();

    let inner = |tree: &BTreeSet<StatementId>| -> f64 {
        tree.iter()
            .map(|id| graph.weight(id).expect("weighted"))
            .fold(1.0, tnorm)
    };
    let attacks_tree = |attacker_root: &StatementId, target: &BTreeSet<StatementId>| -> bool {
        target.iter().any(|m| {
            graph
                .attacks()
                .contains(&(attacker_root.clone(), m.clone()))
        })
    };

    let mut strengths = BTreeMap::new();
    for id in graph.ids() {
        let mut outputs: Vec<f64> = Vec::new();
        let mut own: Vec<&BTreeSet<StatementId>> = trees_by_root[id].iter().collect();
        own.sort();
        for tree in own {
            let against = all_trees
                .iter()
                .filter(|(root, _)| attacks_tree(root, tree))
                .map(|(_, t)| inner(t))
                .fold(0.0, tconorm);
            outputs.push(tnorm(inner(tree), negation(against)));
        }
        strengths.insert(id.clone(), outputs.into_iter().fold(0.0, tconorm));
    }
    strengths
}

pub fn product(a: f64, b: f64) -> f64 {
    a * b
}

pub fn probabilistic_sum(a: f64, b: f64) -> f64 {
    a + b - a * b
}

pub fn minimum(a: f64, b: f64) -> f64 {
    a.min(b)
}

pub fn maximum(a: f64, b: f64) -> f64 {
    a.max(b)
}

pub fn standard_negation(v: f64) -> f64 {
    1.0 - v
}
