//! Complete support trees, the completeness classification, De Morgan
//! triples and the support-tree strength semantics they parameterise.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::model::{Literal, StatementGraph, StatementId};

/// Upper bound on enumerated support trees per statement before giving up.
pub const DEFAULT_TREE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CstError {
    #[error("unknown statement '{id}'")]
    UnknownStatement { id: String },
    #[error("support tree enumeration for '{id}' exceeded the cap of {cap} sets")]
    TreeCapExceeded { id: String, cap: usize },
    #[error("{0} is not a complete support tree of this graph")]
    NotACst(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TripleError {
    #[error("'{name}' violates the De Morgan laws on sampled inputs")]
    DeMorganLawViolated { name: String },
    #[error("'{name}' is not commutative and associative on sampled inputs")]
    NotCommutativeAssociative { name: String },
}

/// How completely a statement is grounded in facts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Completeness {
    Complete,
    PartiallyComplete,
    Incomplete,
}

impl fmt::Display for Completeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Completeness::Complete => "complete",
            Completeness::PartiallyComplete => "partially-complete",
            Completeness::Incomplete => "incomplete",
        };
        f.write_str(name)
    }
}

/// A minimal, internally conflict-free set of statements grounding its root
/// in facts: every premise literal of every member is claimed by a member.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CompleteSupportTree {
    root: StatementId,
    members: BTreeSet<StatementId>,
}

impl CompleteSupportTree {
    pub fn root(&self) -> &StatementId {
        &self.root
    }

    pub fn members(&self) -> &BTreeSet<StatementId> {
        &self.members
    }

    pub fn contains(&self, id: &StatementId) -> bool {
        self.members.contains(id)
    }
}

impl fmt::Display for CompleteSupportTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<&str> = self.members.iter().map(|id| id.as_str()).collect();
        write!(f, "{}:{{{}}}", self.root, members.join(","))
    }
}

/// Map from claimed literal to the statements claiming it, in id order.
fn claimants(graph: &StatementGraph) -> BTreeMap<Literal, Vec<StatementId>> {
    let mut map: BTreeMap<Literal, Vec<StatementId>> = BTreeMap::new();
    for st in graph.statements() {
        map.entry(st.claim().clone())
            .or_default()
            .push(st.id().clone());
    }
    map
}

/// First (member, literal) need with no claiming member, scanning members
/// and literals in canonical order.
fn first_unmet_need<'a>(
    graph: &'a StatementGraph,
    set: &BTreeSet<StatementId>,
) -> Option<&'a Literal> {
    for id in set {
        let st = graph.statement(id).expect("member of the graph");
        for literal in st.prem() {
            let met = set
                .iter()
                .any(|m| graph.statement(m).expect("member of the graph").claim() == literal);
            if !met {
                return Some(literal);
            }
        }
    }
    None
}

fn conflicts_with(graph: &StatementGraph, set: &BTreeSet<StatementId>, id: &StatementId) -> bool {
    set.iter().any(|m| {
        graph.attacks().contains(&(id.clone(), m.clone()))
            || graph.attacks().contains(&(m.clone(), id.clone()))
    })
}

fn enumerate_sets(
    graph: &StatementGraph,
    root: &StatementId,
    claims: &BTreeMap<Literal, Vec<StatementId>>,
    cap: usize,
    stop_at_first: bool,
) -> Result<BTreeSet<BTreeSet<StatementId>>, CstError> {
    let mut completed: BTreeSet<BTreeSet<StatementId>> = BTreeSet::new();
    let mut work: Vec<BTreeSet<StatementId>> = vec![BTreeSet::from([root.clone()])];
    let mut generated = 1usize;
    while let Some(set) = work.pop() {
        match first_unmet_need(graph, &set) {
            None => {
                completed.insert(set);
                if stop_at_first {
                    return Ok(completed);
                }
            }
            Some(literal) => {
                let Some(suppliers) = claims.get(literal) else {
                    continue;
                };
                for supplier in suppliers {
                    if conflicts_with(graph, &set, supplier) {
                        continue;
                    }
                    let mut next = set.clone();
                    next.insert(supplier.clone());
                    generated += 1;
                    if generated > cap {
                        return Err(CstError::TreeCapExceeded {
                            id: root.to_string(),
                            cap,
                        });
                    }
                    work.push(next);
                }
            }
        }
    }
    Ok(completed)
}

/// All complete support trees for `root`, in canonical order, using the
/// default enumeration cap.
pub fn enumerate_csts(
    graph: &StatementGraph,
    root: &StatementId,
) -> Result<Vec<CompleteSupportTree>, CstError> {
    enumerate_csts_capped(graph, root, DEFAULT_TREE_CAP)
}

pub fn enumerate_csts_capped(
    graph: &StatementGraph,
    root: &StatementId,
    cap: usize,
) -> Result<Vec<CompleteSupportTree>, CstError> {
    if !graph.contains(root) {
        return Err(CstError::UnknownStatement {
            id: root.to_string(),
        });
    }
    let claims = claimants(graph);
    let sets = enumerate_sets(graph, root, &claims, cap, false)?;
    // The expansion already yields minimal sets; the subset filter keeps the
    // output honest if that ever changes.
    let minimal: Vec<CompleteSupportTree> = sets
        .iter()
        .filter(|set| {
            !sets
                .iter()
                .any(|other| *other != **set && other.is_subset(set))
        })
        .map(|set| CompleteSupportTree {
            root: root.clone(),
            members: set.clone(),
        })
        .collect();
    Ok(minimal)
}

/// Whether `root` has at least one complete support tree.
pub fn has_cst(graph: &StatementGraph, root: &StatementId) -> Result<bool, CstError> {
    if !graph.contains(root) {
        return Err(CstError::UnknownStatement {
            id: root.to_string(),
        });
    }
    let claims = claimants(graph);
    let sets = enumerate_sets(graph, root, &claims, DEFAULT_TREE_CAP, true)?;
    Ok(!sets.is_empty())
}

/// Complete support trees for every statement of the graph.
pub fn all_csts(
    graph: &StatementGraph,
    cap: usize,
) -> Result<BTreeMap<StatementId, Vec<CompleteSupportTree>>, CstError> {
    let mut map = BTreeMap::new();
    for id in graph.ids() {
        map.insert(id.clone(), enumerate_csts_capped(graph, id, cap)?);
    }
    Ok(map)
}

/// True iff the attacker tree's root attacks some member of the target
/// tree. Both arguments must be complete support trees of `graph`.
pub fn cst_attacks(
    graph: &StatementGraph,
    attacker: &CompleteSupportTree,
    target: &CompleteSupportTree,
) -> Result<bool, CstError> {
    for tree in [attacker, target] {
        let known = enumerate_csts(graph, tree.root())?;
        if !known.contains(tree) {
            return Err(CstError::NotACst(tree.to_string()));
        }
    }
    Ok(tree_attacks(graph, attacker, target))
}

pub(crate) fn tree_attacks(
    graph: &StatementGraph,
    attacker: &CompleteSupportTree,
    target: &CompleteSupportTree,
) -> bool {
    target.members.iter().any(|m| {
        graph
            .attacks()
            .contains(&(attacker.root.clone(), m.clone()))
    })
}

/// Classifies how completely a statement is grounded: complete when it and
/// every statement with a support path to it have trees, partially-complete
/// when only some do but the statement itself does, incomplete otherwise.
pub fn classify_completeness(
    graph: &StatementGraph,
    id: &StatementId,
) -> Result<Completeness, CstError> {
    if !graph.contains(id) {
        return Err(CstError::UnknownStatement { id: id.to_string() });
    }
    if !has_cst(graph, id)? {
        return Ok(Completeness::Incomplete);
    }
    // Walk support edges backwards to collect everything that feeds `id`.
    let mut pending = vec![id.clone()];
    let mut seen: BTreeSet<StatementId> = BTreeSet::from([id.clone()]);
    while let Some(current) = pending.pop() {
        for supporter in graph.supporters_of(&current) {
            if seen.insert(supporter.clone()) {
                pending.push(supporter.clone());
            }
        }
    }
    for ancestor in &seen {
        if !has_cst(graph, ancestor)? {
            return Ok(Completeness::PartiallyComplete);
        }
    }
    Ok(Completeness::Complete)
}

/// A T-norm, its dual T-conorm and a negation, related by the De Morgan
/// laws. Validated on a sampled grid at construction.
#[derive(Clone)]
pub struct DeMorganTriple {
    name: String,
    tnorm: fn(f64, f64) -> f64,
    tconorm: fn(f64, f64) -> f64,
    negation: fn(f64) -> f64,
}

impl fmt::Debug for DeMorganTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeMorganTriple({})", self.name)
    }
}

const LAW_TOLERANCE: f64 = 1e-12;

fn product(a: f64, b: f64) -> f64 {
    a * b
}

fn probabilistic_sum(a: f64, b: f64) -> f64 {
    a + b - a * b
}

fn minimum(a: f64, b: f64) -> f64 {
    a.min(b)
}

fn maximum(a: f64, b: f64) -> f64 {
    a.max(b)
}

fn standard_negation(v: f64) -> f64 {
    1.0 - v
}

impl DeMorganTriple {
    pub fn new(
        name: &str,
        tnorm: fn(f64, f64) -> f64,
        tconorm: fn(f64, f64) -> f64,
        negation: fn(f64) -> f64,
    ) -> Result<Self, TripleError> {
        let triple = DeMorganTriple {
            name: name.to_owned(),
            tnorm,
            tconorm,
            negation,
        };
        triple.validate()?;
        Ok(triple)
    }

    fn validate(&self) -> Result<(), TripleError> {
        let grid: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
        for &a in &grid {
            for &b in &grid {
                let lhs = (self.tnorm)(a, b);
                let rhs = (self.negation)((self.tconorm)((self.negation)(a), (self.negation)(b)));
                let dual_lhs = (self.tconorm)(a, b);
                let dual_rhs =
                    (self.negation)((self.tnorm)((self.negation)(a), (self.negation)(b)));
                if (lhs - rhs).abs() > LAW_TOLERANCE || (dual_lhs - dual_rhs).abs() > LAW_TOLERANCE
                {
                    return Err(TripleError::DeMorganLawViolated {
                        name: self.name.clone(),
                    });
                }
                if ((self.tnorm)(a, b) - (self.tnorm)(b, a)).abs() > LAW_TOLERANCE
                    || ((self.tconorm)(a, b) - (self.tconorm)(b, a)).abs() > LAW_TOLERANCE
                {
                    return Err(TripleError::NotCommutativeAssociative {
                        name: self.name.clone(),
                    });
                }
                for &c in &[0.0, 0.3, 0.7, 1.0] {
                    let assoc_n =
                        (self.tnorm)((self.tnorm)(a, b), c) - (self.tnorm)(a, (self.tnorm)(b, c));
                    let assoc_c = (self.tconorm)((self.tconorm)(a, b), c)
                        - (self.tconorm)(a, (self.tconorm)(b, c));
                    if assoc_n.abs() > LAW_TOLERANCE || assoc_c.abs() > LAW_TOLERANCE {
                        return Err(TripleError::NotCommutativeAssociative {
                            name: self.name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Product, probabilistic sum and standard negation.
    pub fn product() -> Self {
        DeMorganTriple::new("product", product, probabilistic_sum, standard_negation)
            .expect("product triple satisfies the laws")
    }

    /// Minimum, maximum and standard negation.
    pub fn minimum() -> Self {
        DeMorganTriple::new("minimum", minimum, maximum, standard_negation)
            .expect("minimum triple satisfies the laws")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tnorm(&self, a: f64, b: f64) -> f64 {
        (self.tnorm)(a, b)
    }

    pub fn tconorm(&self, a: f64, b: f64) -> f64 {
        (self.tconorm)(a, b)
    }

    pub fn negation(&self, v: f64) -> f64 {
        (self.negation)(v)
    }

    /// Folds with the T-norm; the empty fold is 1.
    pub fn fold_tnorm<I: IntoIterator<Item = f64>>(&self, values: I) -> f64 {
        values.into_iter().fold(1.0, |acc, v| (self.tnorm)(acc, v))
    }

    /// Folds with the T-conorm; the empty fold is 0.
    pub fn fold_tconorm<I: IntoIterator<Item = f64>>(&self, values: I) -> f64 {
        values
            .into_iter()
            .fold(0.0, |acc, v| (self.tconorm)(acc, v))
    }
}

/// The two shipped De Morgan triples.
pub fn builtin_triples() -> Vec<DeMorganTriple> {
    vec![DeMorganTriple::product(), DeMorganTriple::minimum()]
}

/// Support-tree semantics: a statement's strength is the T-conorm over its
/// trees of each tree's weight product discounted by the strongest case
/// against it. Folds run in canonical order so results are reproducible
/// bit for bit.
pub fn eval_tnorm(
    graph: &StatementGraph,
    triple: &DeMorganTriple,
) -> Result<BTreeMap<StatementId, f64>, CstError> {
    eval_tnorm_capped(graph, triple, DEFAULT_TREE_CAP)
}

pub fn eval_tnorm_capped(
    graph: &StatementGraph,
    triple: &DeMorganTriple,
    cap: usize,
) -> Result<BTreeMap<StatementId, f64>, CstError> {
    let by_root = all_csts(graph, cap)?;
    let mut trees: Vec<&CompleteSupportTree> = by_root.values().flatten().collect();
    trees.sort();

    let tree_weight = |tree: &CompleteSupportTree| -> f64 {
        triple.fold_tnorm(
            tree.members()
                .iter()
                .map(|id| graph.weight(id).expect("weight for every statement")),
        )
    };

    let mut strengths = BTreeMap::new();
    for id in graph.ids() {
        let own = &by_root[id];
        let outputs = own.iter().map(|tree| {
            let against = triple.fold_tconorm(
                trees
                    .iter()
                    .filter(|candidate| tree_attacks(graph, candidate, tree))
                    .map(|candidate| tree_weight(candidate)),
            );
            triple.tnorm(tree_weight(tree), triple.negation(against))
        });
        strengths.insert(id.clone(), triple.fold_tconorm(outputs));
    }
    Ok(strengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_sg;

    fn sid(s: &str) -> StatementId {
        StatementId::new(s).unwrap()
    }

    fn graph(text: &str) -> StatementGraph {
        parse_sg(text).unwrap()
    }

    const FIG: &str = "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7";

    /// Five statements whose claims mirror each other through atom `a`.
    const MIRROR: &str = "a1: a => b @ 0.5\na2: T => a @ 0.5\na3: ~a => c @ 0.5\na4: d => ~a @ 0.5\na5: T => d @ 0.5";

    #[test]
    fn basic_graph_trees() {
        let g = graph(FIG);
        let trees = enumerate_csts(&g, &sid("a1")).unwrap();
        assert_eq!(trees.len(), 1);
        let members: Vec<&str> = trees[0].members().iter().map(|m| m.as_str()).collect();
        assert_eq!(members, vec!["a1", "a2", "a3"]);
        assert!(enumerate_csts(&g, &sid("a4")).unwrap().is_empty());
        assert!(enumerate_csts(&g, &sid("zz")).is_err());
    }

    #[test]
    fn alternative_supports_give_separate_trees() {
        let g = graph(
            "b1: b => a @ 0.5\nb2: c => b @ 0.5\nb3: d => b @ 0.5\nb4: T => c @ 0.5\nb5: T => d @ 0.5",
        );
        let trees = enumerate_csts(&g, &sid("b1")).unwrap();
        let sets: Vec<Vec<&str>> = trees
            .iter()
            .map(|t| t.members().iter().map(|m| m.as_str()).collect())
            .collect();
        assert_eq!(sets, vec![vec!["b1", "b2", "b4"], vec!["b1", "b3", "b5"]]);
    }

    #[test]
    fn conflicting_sets_are_pruned() {
        // The only grounding of x1 needs both cq and cp, but cq attacks cp.
        let g = graph("x1: p & q => z @ 1\ncp: ~q => p @ 1\ncq: T => q @ 1\ncn: T => ~q @ 1");
        assert!(enumerate_csts(&g, &sid("x1")).unwrap().is_empty());
        // Attacks from outside candidate sets do not prune them.
        let g = graph("y1: a & b => c @ 1\ny2: T => a @ 1\ny3: a => b @ 1\ny4: T => ~a @ 1");
        assert_eq!(enumerate_csts(&g, &sid("y1")).unwrap().len(), 1);
    }

    #[test]
    fn tree_attack_relation() {
        let g = graph(MIRROR);
        let of = |root: &str| enumerate_csts(&g, &sid(root)).unwrap();
        let a1_tree = &of("a1")[0];
        let a4_tree = &of("a4")[0];
        assert!(cst_attacks(&g, a4_tree, a1_tree).unwrap());
        assert!(!cst_attacks(&g, a1_tree, a1_tree).unwrap());
        let bogus = CompleteSupportTree {
            root: sid("a1"),
            members: BTreeSet::from([sid("a1")]),
        };
        assert!(cst_attacks(&g, &bogus, a1_tree).is_err());
    }

    #[test]
    fn no_tree_of_the_basic_graph_attacks_the_grounded_one() {
        let g = graph(FIG);
        let target = &enumerate_csts(&g, &sid("a1")).unwrap()[0];
        for id in g.ids() {
            for tree in enumerate_csts(&g, id).unwrap() {
                assert!(!tree_attacks(&g, &tree, target));
            }
        }
    }

    #[test]
    fn completeness_three_stages() {
        let base = "ap1: b => a @ 0.5\nap2: c => b @ 0.5\nap3: d => b @ 0.5";
        let g = graph(base);
        assert_eq!(
            classify_completeness(&g, &sid("ap1")).unwrap(),
            Completeness::Incomplete
        );
        let g = graph(&format!("{base}\nap4: T => c @ 0.5"));
        assert_eq!(
            classify_completeness(&g, &sid("ap1")).unwrap(),
            Completeness::PartiallyComplete
        );
        let g = graph(&format!("{base}\nap4: T => c @ 0.5\nap5: T => d @ 0.5"));
        assert_eq!(
            classify_completeness(&g, &sid("ap1")).unwrap(),
            Completeness::Complete
        );
    }

    #[test]
    fn lone_fact_is_complete() {
        let g = graph("f: T => a @ 0.2");
        assert_eq!(
            classify_completeness(&g, &sid("f")).unwrap(),
            Completeness::Complete
        );
    }

    #[test]
    fn builtin_triples_behave() {
        let triples = builtin_triples();
        let p = &triples[0];
        let m = &triples[1];
        assert!((p.tconorm(0.3, 0.4) - 0.58).abs() < 1e-12);
        assert_eq!(m.tnorm(0.3, 0.4), 0.3);
        for v in [0.0, 0.25, 0.5, 1.0] {
            assert_eq!(p.negation(p.negation(v)), v);
        }
        assert_eq!(p.fold_tconorm([]), 0.0);
        assert_eq!(p.fold_tnorm([]), 1.0);
    }

    #[test]
    fn bad_triples_are_rejected() {
        // Product paired with maximum breaks the De Morgan laws.
        let err = DeMorganTriple::new("broken", product, maximum, standard_negation);
        assert!(matches!(err, Err(TripleError::DeMorganLawViolated { .. })));
    }

    #[test]
    fn tnorm_product_on_the_basic_graph() {
        let g = graph(FIG);
        let s = eval_tnorm(&g, &DeMorganTriple::product()).unwrap();
        assert!((s[&sid("a1")] - 0.432).abs() < 1e-12);
        assert_eq!(s[&sid("a4")], 0.0);
        assert!((s[&sid("a2")] - 0.9).abs() < 1e-12);
    }

    #[test]
    fn tnorm_product_ignores_chain_length() {
        let g = graph(&format!("{FIG}\na5: a => e @ 1\na6: e & b => c @ 0.8"));
        let s = eval_tnorm(&g, &DeMorganTriple::product()).unwrap();
        assert!((s[&sid("a1")] - 0.432).abs() < 1e-12);
        assert!((s[&sid("a6")] - 0.432).abs() < 1e-12);
    }

    #[test]
    fn mirror_graph_strengths() {
        let g = graph(MIRROR);
        let p = eval_tnorm(&g, &DeMorganTriple::product()).unwrap();
        assert!((p[&sid("a1")] - 0.1875).abs() < 1e-12);
        assert!((p[&sid("a3")] - 0.0625).abs() < 1e-12);
        // With all weights at 0.5 the min/max instantiation cannot leave
        // {0, 0.5, 1}.
        let m = eval_tnorm(&g, &DeMorganTriple::minimum()).unwrap();
        assert_eq!(m[&sid("a1")], 0.5);
        assert_eq!(m[&sid("a3")], 0.5);
    }

    #[test]
    fn ungrounded_statement_scores_zero() {
        let g = graph("s: b => a @ 1");
        let s = eval_tnorm(&g, &DeMorganTriple::product()).unwrap();
        assert_eq!(s[&sid("s")], 0.0);
        let s = eval_tnorm(&g, &DeMorganTriple::minimum()).unwrap();
        assert_eq!(s[&sid("s")], 0.0);
    }

    #[test]
    fn tree_cap_is_enforced() {
        let g = graph("r: a => z @ 1\ns1: T => a @ 1\ns2: b => a @ 1\ns3: T => b @ 1");
        let err = enumerate_csts_capped(&g, &sid("r"), 2).unwrap_err();
        assert!(matches!(err, CstError::TreeCapExceeded { .. }));
    }
}
