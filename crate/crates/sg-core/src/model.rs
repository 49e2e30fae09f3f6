//! The logical and graph-theoretic data model: literals, conjunctive
//! premises, statements, and statement graphs with derived attack and
//! support relations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Reserved token for the always-true premise.
pub const TOP_TOKEN: &str = "T";

/// Errors raised while constructing model values or graphs.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("'{0}' is not a valid identifier")]
    InvalidIdentifier(String),
    #[error("'{TOP_TOKEN}' is reserved for the true premise and cannot be used as an atom")]
    ReservedAtom,
    #[error("the true premise has no negation")]
    NegatedTop,
    #[error("the true premise cannot be a claim")]
    TopAsClaim,
    #[error("the true premise cannot be conjoined with other literals")]
    TopInConjunction,
    #[error("premise contains both '{atom}' and '~{atom}'")]
    InconsistentPremise { atom: String },
    #[error("a conjunctive premise needs at least one literal")]
    EmptyPremise,
    #[error("duplicate statement id '{id}'")]
    DuplicateId { id: String },
    #[error("statements '{first}' and '{second}' have the same premise and claim")]
    DuplicateStatement { first: String, second: String },
    #[error("no weight given for statement '{id}'")]
    MissingWeight { id: String },
    #[error("weight given for unknown statement '{id}'")]
    UnknownStatement { id: String },
    #[error("weight {value} for statement '{id}' is outside [0, 1]")]
    WeightOutOfRange { id: String, value: f64 },
    #[error("the graph contains a cycle: {}", format_cycle(.cycle))]
    CyclicGraph { cycle: Vec<StatementId> },
}

fn format_cycle(cycle: &[StatementId]) -> String {
    let mut parts: Vec<&str> = cycle.iter().map(|id| id.as_str()).collect();
    if let Some(first) = parts.first().copied() {
        parts.push(first);
    }
    parts.join(" -> ")
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Identifier of a statement within a graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatementId(String);

impl StatementId {
    pub fn new(id: &str) -> Result<Self, ModelError> {
        if is_identifier(id) {
            Ok(StatementId(id.to_owned()))
        } else {
            Err(ModelError::InvalidIdentifier(id.to_owned()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An atom or its negation. The reserved true premise is also represented
/// as a literal so that parsers can hand it around, but it never negates
/// and never occurs inside a conjunction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    atom: String,
    negated: bool,
}

impl Literal {
    /// The true premise marker.
    pub fn top() -> Self {
        Literal {
            atom: TOP_TOKEN.to_owned(),
            negated: false,
        }
    }

    pub fn new(atom: &str, negated: bool) -> Result<Self, ModelError> {
        if atom == TOP_TOKEN {
            return Err(ModelError::ReservedAtom);
        }
        if !is_identifier(atom) {
            return Err(ModelError::InvalidIdentifier(atom.to_owned()));
        }
        Ok(Literal {
            atom: atom.to_owned(),
            negated,
        })
    }

    pub fn pos(atom: &str) -> Result<Self, ModelError> {
        Literal::new(atom, false)
    }

    pub fn neg(atom: &str) -> Result<Self, ModelError> {
        Literal::new(atom, true)
    }

    pub fn is_top(&self) -> bool {
        self.atom == TOP_TOKEN
    }

    pub fn atom(&self) -> &str {
        &self.atom
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    /// Flips the polarity. Double negation cancels structurally, so this is
    /// involutive. The true premise has no negation.
    pub fn negate(&self) -> Result<Self, ModelError> {
        if self.is_top() {
            return Err(ModelError::NegatedTop);
        }
        Ok(Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        })
    }

    /// Polarity flip for literals known not to be the true premise.
    pub(crate) fn flipped(&self) -> Literal {
        debug_assert!(!self.is_top());
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.atom)
        } else {
            f.write_str(&self.atom)
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Either the true premise or a consistent conjunction of literals.
/// Literal sets are canonically ordered, so premises built from permuted
/// literal lists compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Premise {
    Top,
    Conjunction(BTreeSet<Literal>),
}

impl Premise {
    pub fn top() -> Self {
        Premise::Top
    }

    /// Builds a conjunction, rejecting empty, top-containing and
    /// inconsistent literal sets.
    pub fn conjunction<I>(literals: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = Literal>,
    {
        let mut set = BTreeSet::new();
        for lit in literals {
            if lit.is_top() {
                return Err(ModelError::TopInConjunction);
            }
            set.insert(lit);
        }
        if set.is_empty() {
            return Err(ModelError::EmptyPremise);
        }
        for lit in &set {
            if lit.is_negated() && set.contains(&lit.flipped()) {
                return Err(ModelError::InconsistentPremise {
                    atom: lit.atom().to_owned(),
                });
            }
        }
        Ok(Premise::Conjunction(set))
    }

    /// Builds a premise from a raw literal list: the top marker alone means
    /// the true premise, mixing it with other literals is rejected.
    pub fn from_literals(literals: &[Literal]) -> Result<Self, ModelError> {
        let has_top = literals.iter().any(Literal::is_top);
        if has_top {
            if literals.iter().all(Literal::is_top) {
                Ok(Premise::Top)
            } else {
                Err(ModelError::TopInConjunction)
            }
        } else {
            Premise::conjunction(literals.iter().cloned())
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Premise::Top)
    }

    /// The literals of the premise; empty for the true premise.
    pub fn literals(&self) -> impl Iterator<Item = &Literal> + '_ {
        match self {
            Premise::Top => None.into_iter().flatten(),
            Premise::Conjunction(set) => Some(set.iter()).into_iter().flatten(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Premise::Top => 0,
            Premise::Conjunction(set) => set.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, literal: &Literal) -> bool {
        match self {
            Premise::Top => false,
            Premise::Conjunction(set) => set.contains(literal),
        }
    }
}

impl fmt::Display for Premise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Premise::Top => f.write_str(TOP_TOKEN),
            Premise::Conjunction(set) => {
                let parts: Vec<String> = set.iter().map(|l| l.to_string()).collect();
                f.write_str(&parts.join(" & "))
            }
        }
    }
}

/// A premise paired with a claimed literal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Statement {
    id: StatementId,
    premise: Premise,
    claim: Literal,
}

impl Statement {
    pub fn new(id: StatementId, premise: Premise, claim: Literal) -> Result<Self, ModelError> {
        if claim.is_top() {
            return Err(ModelError::TopAsClaim);
        }
        Ok(Statement { id, premise, claim })
    }

    /// Builds a statement from its id, raw premise literal list and claim.
    pub fn make(
        id: &str,
        premise_literals: &[Literal],
        claim: Literal,
    ) -> Result<Self, ModelError> {
        Statement::new(
            StatementId::new(id)?,
            Premise::from_literals(premise_literals)?,
            claim,
        )
    }

    pub fn id(&self) -> &StatementId {
        &self.id
    }

    pub fn premise(&self) -> &Premise {
        &self.premise
    }

    pub fn claim(&self) -> &Literal {
        &self.claim
    }

    /// The premise literals; empty when the premise is true.
    pub fn prem(&self) -> impl Iterator<Item = &Literal> + '_ {
        self.premise.literals()
    }

    /// True iff this statement's claim occurs in `other`'s premise.
    pub fn supports(&self, other: &Statement) -> bool {
        other.premise.contains(&self.claim)
    }

    /// True iff the negation of this statement's claim occurs in `other`'s
    /// premise.
    pub fn attacks(&self, other: &Statement) -> bool {
        other.premise.contains(&self.claim.flipped())
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} => {}", self.id, self.premise, self.claim)
    }
}

/// A derived relation: ordered (source, target) statement id pairs.
pub type EdgeSet = BTreeSet<(StatementId, StatementId)>;

/// Which edge set a path query walks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathRelation {
    SupportsOnly,
    Any,
}

/// Derives the attack and support edge sets over a slice of statements.
/// Returns `(attacks, supports)` keyed by statement id.
pub fn derive_relations(statements: &[Statement]) -> (EdgeSet, EdgeSet) {
    let mut attacks = BTreeSet::new();
    let mut supports = BTreeSet::new();
    for source in statements {
        for target in statements {
            if source.id() == target.id() {
                continue;
            }
            if source.attacks(target) {
                attacks.insert((source.id().clone(), target.id().clone()));
            }
            if source.supports(target) {
                supports.insert((source.id().clone(), target.id().clone()));
            }
        }
    }
    (attacks, supports)
}

/// A weighted, acyclic statement graph with derived attack and support
/// relations. Immutable after construction.
#[derive(Clone, PartialEq, Debug)]
pub struct StatementGraph {
    statements: BTreeMap<StatementId, Statement>,
    weights: BTreeMap<StatementId, f64>,
    attacks: EdgeSet,
    supports: EdgeSet,
    attackers: BTreeMap<StatementId, Vec<StatementId>>,
    supporters: BTreeMap<StatementId, Vec<StatementId>>,
    topo: Vec<StatementId>,
}

impl StatementGraph {
    pub fn empty() -> Self {
        StatementGraph {
            statements: BTreeMap::new(),
            weights: BTreeMap::new(),
            attacks: BTreeSet::new(),
            supports: BTreeSet::new(),
            attackers: BTreeMap::new(),
            supporters: BTreeMap::new(),
            topo: Vec::new(),
        }
    }

    /// Validates statements and weights, derives the relations and checks
    /// acyclicity.
    pub fn build(
        statements: impl IntoIterator<Item = Statement>,
        weights: impl IntoIterator<Item = (StatementId, f64)>,
    ) -> Result<Self, ModelError> {
        let mut by_id: BTreeMap<StatementId, Statement> = BTreeMap::new();
        for st in statements {
            if by_id.contains_key(st.id()) {
                return Err(ModelError::DuplicateId {
                    id: st.id().to_string(),
                });
            }
            by_id.insert(st.id().clone(), st);
        }

        // Statements form a set: two ids with the same premise and claim are
        // rejected rather than silently merged.
        let mut seen: BTreeMap<(Premise, Literal), StatementId> = BTreeMap::new();
        for st in by_id.values() {
            let key = (st.premise().clone(), st.claim().clone());
            if let Some(first) = seen.get(&key) {
                return Err(ModelError::DuplicateStatement {
                    first: first.to_string(),
                    second: st.id().to_string(),
                });
            }
            seen.insert(key, st.id().clone());
        }

        let mut weight_map = BTreeMap::new();
        for (id, w) in weights {
            if !by_id.contains_key(&id) {
                return Err(ModelError::UnknownStatement { id: id.to_string() });
            }
            if !(0.0..=1.0).contains(&w) {
                return Err(ModelError::WeightOutOfRange {
                    id: id.to_string(),
                    value: w,
                });
            }
            weight_map.insert(id, w);
        }
        for id in by_id.keys() {
            if !weight_map.contains_key(id) {
                return Err(ModelError::MissingWeight { id: id.to_string() });
            }
        }

        let all: Vec<Statement> = by_id.values().cloned().collect();
        let (attacks, supports) = derive_relations(&all);
        debug_assert!(attacks.intersection(&supports).next().is_none());

        let mut attackers: BTreeMap<StatementId, Vec<StatementId>> = BTreeMap::new();
        let mut supporters: BTreeMap<StatementId, Vec<StatementId>> = BTreeMap::new();
        for id in by_id.keys() {
            attackers.insert(id.clone(), Vec::new());
            supporters.insert(id.clone(), Vec::new());
        }
        for (from, to) in &attacks {
            attackers.get_mut(to).expect("known id").push(from.clone());
        }
        for (from, to) in &supports {
            supporters.get_mut(to).expect("known id").push(from.clone());
        }

        let topo = topological_sort(&by_id, &attacks, &supports)?;

        Ok(StatementGraph {
            statements: by_id,
            weights: weight_map,
            attacks,
            supports,
            attackers,
            supporters,
            topo,
        })
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    pub fn contains(&self, id: &StatementId) -> bool {
        self.statements.contains_key(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &StatementId> + '_ {
        self.statements.keys()
    }

    pub fn statements(&self) -> impl Iterator<Item = &Statement> + '_ {
        self.statements.values()
    }

    pub fn statement(&self, id: &StatementId) -> Option<&Statement> {
        self.statements.get(id)
    }

    pub fn weight(&self, id: &StatementId) -> Option<f64> {
        self.weights.get(id).copied()
    }

    pub fn weights(&self) -> &BTreeMap<StatementId, f64> {
        &self.weights
    }

    pub fn attacks(&self) -> &EdgeSet {
        &self.attacks
    }

    pub fn supports(&self) -> &EdgeSet {
        &self.supports
    }

    /// Statements attacking `id`, in id order. Empty for unknown ids.
    pub fn attackers_of(&self, id: &StatementId) -> &[StatementId] {
        self.attackers.get(id).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Statements supporting `id`, in id order. Empty for unknown ids.
    pub fn supporters_of(&self, id: &StatementId) -> &[StatementId] {
        self.supporters.get(id).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Statement ids in dependency order: every attacker and supporter of a
    /// statement precedes it.
    pub fn topological_order(&self) -> &[StatementId] {
        &self.topo
    }

    /// True iff a non-empty directed edge sequence leads from `from` to `to`
    /// through the selected relation.
    pub fn exists_path(
        &self,
        from: &StatementId,
        to: &StatementId,
        via: PathRelation,
    ) -> Result<bool, ModelError> {
        for id in [from, to] {
            if !self.contains(id) {
                return Err(ModelError::UnknownStatement { id: id.to_string() });
            }
        }
        let successors = |id: &StatementId| -> Vec<&StatementId> {
            let mut out: Vec<&StatementId> = self
                .supports
                .range((id.clone(), first_id())..)
                .take_while(|(f, _)| f == id)
                .map(|(_, t)| t)
                .collect();
            if via == PathRelation::Any {
                out.extend(
                    self.attacks
                        .range((id.clone(), first_id())..)
                        .take_while(|(f, _)| f == id)
                        .map(|(_, t)| t),
                );
            }
            out
        };
        let mut stack: Vec<&StatementId> = successors(from);
        let mut visited: BTreeSet<&StatementId> = BTreeSet::new();
        while let Some(node) = stack.pop() {
            if node == to {
                return Ok(true);
            }
            if visited.insert(node) {
                stack.extend(successors(node));
            }
        }
        Ok(false)
    }

    /// Copy of the graph with one weight replaced.
    pub fn with_weight(&self, id: &StatementId, weight: f64) -> Result<Self, ModelError> {
        if !self.contains(id) {
            return Err(ModelError::UnknownStatement { id: id.to_string() });
        }
        let mut weights = self.weights.clone();
        weights.insert(id.clone(), weight);
        StatementGraph::build(self.statements.values().cloned(), weights)
    }

    /// Copy of the graph with a statement added; relations are re-derived.
    pub fn with_added(&self, statement: Statement, weight: f64) -> Result<Self, ModelError> {
        let mut statements: Vec<Statement> = self.statements.values().cloned().collect();
        let mut weights = self.weights.clone();
        weights.insert(statement.id().clone(), weight);
        statements.push(statement);
        StatementGraph::build(statements, weights)
    }

    /// Copy of the graph with a statement removed; relations are re-derived.
    pub fn without(&self, id: &StatementId) -> Result<Self, ModelError> {
        if !self.contains(id) {
            return Err(ModelError::UnknownStatement { id: id.to_string() });
        }
        let statements = self.statements.values().filter(|st| st.id() != id).cloned();
        let weights = self
            .weights
            .iter()
            .filter(|(k, _)| *k != id)
            .map(|(k, v)| (k.clone(), *v));
        StatementGraph::build(statements, weights)
    }
}

fn first_id() -> StatementId {
    StatementId(String::new())
}

fn topological_sort(
    statements: &BTreeMap<StatementId, Statement>,
    attacks: &EdgeSet,
    supports: &EdgeSet,
) -> Result<Vec<StatementId>, ModelError> {
    let mut indegree: BTreeMap<&StatementId, usize> = statements.keys().map(|id| (id, 0)).collect();
    let mut out: BTreeMap<&StatementId, Vec<&StatementId>> =
        statements.keys().map(|id| (id, Vec::new())).collect();
    for (from, to) in attacks.iter().chain(supports.iter()) {
        *indegree.get_mut(to).expect("known id") += 1;
        out.get_mut(from).expect("known id").push(to);
    }

    let mut ready: BTreeSet<&StatementId> = indegree
        .iter()
        .filter(|(_, d)| **d == 0)
        .map(|(id, _)| *id)
        .collect();
    let mut order = Vec::with_capacity(statements.len());
    while let Some(id) = ready.pop_first() {
        order.push(id.clone());
        for succ in &out[id] {
            let d = indegree.get_mut(succ).expect("known id");
            *d -= 1;
            if *d == 0 {
                ready.insert(succ);
            }
        }
    }

    if order.len() == statements.len() {
        return Ok(order);
    }

    // Surface one concrete cycle: strip leftover nodes with no leftover
    // successor until only cycle nodes remain, then walk.
    let mut residue: BTreeSet<&StatementId> = indegree
        .iter()
        .filter(|(_, d)| **d > 0)
        .map(|(id, _)| *id)
        .collect();
    loop {
        let dead_ends: Vec<&StatementId> = residue
            .iter()
            .filter(|id| !out[**id].iter().any(|succ| residue.contains(succ)))
            .copied()
            .collect();
        if dead_ends.is_empty() {
            break;
        }
        for id in dead_ends {
            residue.remove(id);
        }
    }
    let start = *residue.iter().next().expect("a cycle remains");
    let mut path: Vec<&StatementId> = vec![start];
    let mut seen: BTreeMap<&StatementId, usize> = BTreeMap::new();
    seen.insert(start, 0);
    let mut current = start;
    loop {
        let next = out[current]
            .iter()
            .find(|succ| residue.contains(*succ))
            .expect("every residue node keeps a residue successor");
        if let Some(&pos) = seen.get(*next) {
            let cycle = path[pos..].iter().map(|id| (*id).clone()).collect();
            return Err(ModelError::CyclicGraph { cycle });
        }
        seen.insert(next, path.len());
        path.push(next);
        current = next;
    }
}
