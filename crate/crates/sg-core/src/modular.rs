//! Premise graphs and modular structured semantics: each premise literal of
//! a statement is scored dialectically by an abstract semantics, then the
//! literal scores are folded by a premise aggregation function. The
//! dialectical conjunction semantics is the product instantiation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bipolar::AbstractSemantics;
use crate::model::{Literal, StatementGraph, StatementId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModularError {
    #[error("unknown statement '{id}'")]
    UnknownStatement { id: String },
    #[error("statement '{id}' has the true premise; its strength is its weight")]
    EmptyPremise { id: String },
    #[error("no strength given for neighbour '{id}'")]
    MissingNeighborStrength { id: String },
    #[error("a 0th root is undefined")]
    ZeroRoot,
}

/// `weight^(1/n)`, with 0 mapping to 0 exactly for every n.
pub fn nth_root(weight: f64, n: usize) -> Result<f64, ModularError> {
    debug_assert!((0.0..=1.0).contains(&weight));
    if n == 0 {
        return Err(ModularError::ZeroRoot);
    }
    if weight == 0.0 {
        return Ok(0.0);
    }
    if n == 1 {
        return Ok(weight);
    }
    Ok((weight.ln() / n as f64).exp())
}

/// The one-level auxiliary graph scoring the premise literals of a focus
/// statement: literal nodes carry the n-th root of the focus weight as
/// base score, neighbour nodes carry externally supplied strengths, and
/// each neighbour points at the literal its claim matches or negates.
#[derive(Clone, Debug)]
pub struct PremiseGraph {
    focus: StatementId,
    literal_base: f64,
    literals: Vec<Literal>,
    neighbor_base: BTreeMap<StatementId, f64>,
    attack_edges: Vec<(StatementId, Literal)>,
    support_edges: Vec<(StatementId, Literal)>,
}

impl PremiseGraph {
    pub fn focus(&self) -> &StatementId {
        &self.focus
    }

    /// Base score shared by every literal node.
    pub fn literal_base(&self) -> f64 {
        self.literal_base
    }

    /// Literal nodes in canonical order.
    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn neighbor_base(&self) -> &BTreeMap<StatementId, f64> {
        &self.neighbor_base
    }

    pub fn attack_edges(&self) -> &[(StatementId, Literal)] {
        &self.attack_edges
    }

    pub fn support_edges(&self) -> &[(StatementId, Literal)] {
        &self.support_edges
    }

    /// Scores every literal node with the abstract semantics. Neighbour
    /// nodes have no incoming edges, so their scores are their bases.
    pub fn literal_scores(&self, semantics: &dyn AbstractSemantics) -> BTreeMap<Literal, f64> {
        let mut scores = BTreeMap::new();
        for literal in &self.literals {
            let collect = |edges: &[(StatementId, Literal)]| -> Vec<f64> {
                edges
                    .iter()
                    .filter(|(_, target)| target == literal)
                    .map(|(id, _)| self.neighbor_base[id])
                    .collect()
            };
            let attackers = collect(&self.attack_edges);
            let supporters = collect(&self.support_edges);
            scores.insert(
                literal.clone(),
                semantics.combine(self.literal_base, &attackers, &supporters),
            );
        }
        scores
    }
}

/// Builds the premise graph of `focus`. Every attacker and supporter of
/// `focus` must have a strength in `neighbor_strengths`.
pub fn build_premise_graph(
    graph: &StatementGraph,
    focus: &StatementId,
    neighbor_strengths: &BTreeMap<StatementId, f64>,
) -> Result<PremiseGraph, ModularError> {
    let statement = graph
        .statement(focus)
        .ok_or_else(|| ModularError::UnknownStatement {
            id: focus.to_string(),
        })?;
    let literals: Vec<Literal> = statement.prem().cloned().collect();
    if literals.is_empty() {
        return Err(ModularError::EmptyPremise {
            id: focus.to_string(),
        });
    }
    let weight = graph.weight(focus).expect("weight for every statement");
    let literal_base = nth_root(weight, literals.len()).expect("non-empty premise");

    let mut neighbor_base = BTreeMap::new();
    let mut attack_edges = Vec::new();
    let mut support_edges = Vec::new();
    let neighbors = graph
        .attackers_of(focus)
        .iter()
        .chain(graph.supporters_of(focus).iter());
    for neighbor in neighbors {
        let strength = *neighbor_strengths.get(neighbor).ok_or_else(|| {
            ModularError::MissingNeighborStrength {
                id: neighbor.to_string(),
            }
        })?;
        neighbor_base.insert(neighbor.clone(), strength);
        let claim = graph
            .statement(neighbor)
            .expect("neighbour of the graph")
            .claim();
        if statement.premise().contains(claim) {
            support_edges.push((neighbor.clone(), claim.clone()));
        } else {
            let negated = claim.negate().expect("claims are never the true premise");
            debug_assert!(statement.premise().contains(&negated));
            attack_edges.push((neighbor.clone(), negated));
        }
    }
    attack_edges.sort();
    support_edges.sort();

    Ok(PremiseGraph {
        focus: focus.clone(),
        literal_base,
        literals,
        neighbor_base,
        attack_edges,
        support_edges,
    })
}

type FoldFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Folds a statement's literal scores into its strength. Aggregators must
/// be permutation-invariant and map all-ones to 1.
#[derive(Clone)]
pub struct PremiseAggregator {
    name: String,
    fold: FoldFn,
}

impl fmt::Debug for PremiseAggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PremiseAggregator({})", self.name)
    }
}

impl PremiseAggregator {
    pub fn new(name: &str, fold: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        PremiseAggregator {
            name: name.to_owned(),
            fold: Arc::new(fold),
        }
    }

    /// Conjunctive reading: the product of the literal scores.
    pub fn product() -> Self {
        PremiseAggregator::new("product", |scores| scores.iter().product())
    }

    /// Disjunctive reading: the probabilistic sum of the literal scores.
    /// Library-only; the shipped semantics all use the product.
    pub fn probabilistic_sum() -> Self {
        PremiseAggregator::new("probabilistic-sum", |scores| {
            scores.iter().fold(0.0, |acc, v| acc + v - acc * v)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, scores: &[f64]) -> f64 {
        (self.fold)(scores)
    }
}

/// Modular structured evaluation: statements are scored in dependency
/// order; a statement with the true premise scores its weight, any other
/// statement scores the aggregated literal scores of its premise graph,
/// with neighbour bases taken from the already computed strengths.
pub fn eval_modular(
    graph: &StatementGraph,
    semantics: &dyn AbstractSemantics,
    aggregator: &PremiseAggregator,
) -> BTreeMap<StatementId, f64> {
    let mut strengths: BTreeMap<StatementId, f64> = BTreeMap::new();
    for id in graph.topological_order() {
        let statement = graph.statement(id).expect("ordered ids are in the graph");
        let strength = if statement.premise().is_top() {
            graph.weight(id).expect("weight for every statement")
        } else {
            let pg = build_premise_graph(graph, id, &strengths)
                .expect("neighbours precede in topological order");
            let scores = pg.literal_scores(semantics);
            let ordered: Vec<f64> = pg.literals().iter().map(|l| scores[l]).collect();
            aggregator.apply(&ordered)
        };
        strengths.insert(id.clone(), strength);
    }
    strengths
}

/// The dialectical conjunction semantics supported by `semantics`:
/// modular evaluation with the product aggregator.
pub fn eval_dc(
    graph: &StatementGraph,
    semantics: &dyn AbstractSemantics,
) -> BTreeMap<StatementId, f64> {
    eval_modular(graph, semantics, &PremiseAggregator::product())
}

/// The per-literal scores behind a statement's dialectical conjunction
/// strength, for inspection and reporting.
pub fn dc_literal_scores(
    graph: &StatementGraph,
    semantics: &dyn AbstractSemantics,
    focus: &StatementId,
) -> Result<BTreeMap<Literal, f64>, ModularError> {
    let strengths = eval_dc(graph, semantics);
    let pg = build_premise_graph(graph, focus, &strengths)?;
    Ok(pg.literal_scores(semantics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipolar::{DfQuad, Qem};
    use crate::parse::parse_sg;

    fn sid(s: &str) -> StatementId {
        StatementId::new(s).unwrap()
    }

    fn lit(s: &str) -> Literal {
        if let Some(stripped) = s.strip_prefix('~') {
            Literal::neg(stripped).unwrap()
        } else {
            Literal::pos(s).unwrap()
        }
    }

    const FIG: &str = "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7";

    #[test]
    fn nth_root_cases() {
        assert!((nth_root(0.8, 2).unwrap() - 0.894_427_190_999_915_9).abs() < 1e-12);
        assert_eq!(nth_root(0.0, 5).unwrap(), 0.0);
        assert_eq!(nth_root(1.0, 7).unwrap(), 1.0);
        assert_eq!(nth_root(0.37, 1).unwrap(), 0.37);
        assert_eq!(nth_root(0.5, 0), Err(ModularError::ZeroRoot));
    }

    #[test]
    fn premise_graph_of_the_running_example() {
        let g = parse_sg(FIG).unwrap();
        let strengths: BTreeMap<_, _> = [("a2", 0.9), ("a3", 0.6), ("a4", 0.7)]
            .into_iter()
            .map(|(id, v)| (sid(id), v))
            .collect();
        let pg = build_premise_graph(&g, &sid("a1"), &strengths).unwrap();
        assert_eq!(pg.literals(), &[lit("a"), lit("b")]);
        assert!((pg.literal_base() - 0.894_427_190_999_915_9).abs() < 1e-12);
        assert_eq!(
            pg.support_edges(),
            &[(sid("a2"), lit("a")), (sid("a3"), lit("b"))]
        );
        assert_eq!(pg.attack_edges(), &[(sid("a4"), lit("a"))]);

        let err = build_premise_graph(&g, &sid("a2"), &strengths);
        assert!(matches!(err, Err(ModularError::EmptyPremise { .. })));
        let err = build_premise_graph(&g, &sid("a1"), &BTreeMap::new());
        assert!(matches!(
            err,
            Err(ModularError::MissingNeighborStrength { .. })
        ));
    }

    #[test]
    fn single_literal_premise_without_neighbours() {
        let g = parse_sg("s: x => y @ 0.4").unwrap();
        let pg = build_premise_graph(&g, &sid("s"), &BTreeMap::new()).unwrap();
        assert_eq!(pg.literal_base(), 0.4);
        assert!(pg.attack_edges().is_empty() && pg.support_edges().is_empty());
    }

    #[test]
    fn dc_on_the_running_example() {
        let g = parse_sg(FIG).unwrap();
        let s = eval_dc(&g, &DfQuad);
        assert!((s[&sid("a1")] - 0.877).abs() < 2e-3);
        assert_eq!(s[&sid("a4")], 0.7);
        let literals = dc_literal_scores(&g, &DfQuad, &sid("a1")).unwrap();
        assert!((literals[&lit("a")] - 0.916).abs() < 2e-3);
        assert!((literals[&lit("b")] - 0.957).abs() < 2e-3);
    }

    #[test]
    fn fully_contradicted_literal_zeroes_the_statement() {
        let g = parse_sg(
            "a5: a => e @ 1\na2: T => a @ 0.9\na4: d => ~a @ 0.8\na8: e & f => ~b @ 0.5\na9: T => ~f @ 1",
        )
        .unwrap();
        let s = eval_dc(&g, &DfQuad);
        assert_eq!(s[&sid("a8")], 0.0);
    }

    #[test]
    fn aggregator_variants() {
        let g = parse_sg(FIG).unwrap();
        let ones = PremiseAggregator::new("always-one", |_| 1.0);
        let s = eval_modular(&g, &DfQuad, &ones);
        assert_eq!(s[&sid("a1")], 1.0);
        assert_eq!(s[&sid("a2")], 0.9);

        let min = PremiseAggregator::new("min", |scores| {
            scores.iter().copied().fold(f64::INFINITY, f64::min)
        });
        let s = eval_modular(&g, &DfQuad, &min);
        let literals = dc_literal_scores(&g, &DfQuad, &sid("a1")).unwrap();
        let expected = literals[&lit("a")].min(literals[&lit("b")]);
        assert_eq!(s[&sid("a1")], expected);

        let psum = PremiseAggregator::probabilistic_sum();
        assert_eq!(psum.apply(&[1.0, 1.0]), 1.0);
        assert_eq!(psum.apply(&[0.0, 0.0]), 0.0);
    }

    #[test]
    fn dc_with_qem_support() {
        let g = parse_sg("a1: b => a @ 0.5\na2: T => ~b @ 1").unwrap();
        let s = eval_dc(&g, &Qem);
        assert!((s[&sid("a1")] - 0.25).abs() < 1e-12);
        let g = parse_sg("a1: b => a @ 0.5\na2: T => b @ 1").unwrap();
        let s = eval_dc(&g, &Qem);
        assert!((s[&sid("a1")] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn repeated_evaluation_is_bit_identical() {
        let g = parse_sg(FIG).unwrap();
        let a = eval_dc(&g, &DfQuad);
        let b = eval_dc(&g, &DfQuad);
        for (id, v) in &a {
            assert_eq!(v.to_bits(), b[id].to_bits());
        }
    }
}
