//! Scenario validation and property checking.
//!
//! `validate_scenario` re-derives every structural side condition of the
//! scenario's property directly from its graphs, independently of however
//! the scenario was produced. `check_property` then evaluates the semantics
//! and tests the property's semantic antecedent and consequent: equalities
//! within the tolerance, inequalities with the tolerance as slack. An
//! instance whose semantic antecedent fails holds vacuously.

use std::collections::{BTreeMap, BTreeSet};

use crate::cst::{all_csts, tree_attacks, CompleteSupportTree, DEFAULT_TREE_CAP};
use crate::model::{Literal, PathRelation, Statement, StatementGraph, StatementId};
use crate::semantics::Semantics;

use super::{PropertyError, PropertyId, PropertyVerdict, Scenario, VerdictStatus, Witness};

pub(crate) struct CheckOutcome {
    pub verdict: PropertyVerdict,
    /// False when the property's semantic antecedent failed and the verdict
    /// is a vacuous hold.
    pub antecedent_met: bool,
}

fn eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn malformed(msg: impl Into<String>) -> PropertyError {
    PropertyError::MalformedScenario(msg.into())
}

fn single(scenario: &Scenario) -> Result<&StatementGraph, PropertyError> {
    if scenario.modified.is_some() {
        return Err(malformed(format!(
            "{} takes a single graph",
            scenario.property
        )));
    }
    Ok(&scenario.base)
}

fn pair(scenario: &Scenario) -> Result<(&StatementGraph, &StatementGraph), PropertyError> {
    let modified = scenario
        .modified
        .as_ref()
        .ok_or_else(|| malformed(format!("{} takes a graph pair", scenario.property)))?;
    Ok((&scenario.base, modified))
}

fn statement_of<'a>(
    graph: &'a StatementGraph,
    id: &StatementId,
) -> Result<&'a Statement, PropertyError> {
    graph
        .statement(id)
        .ok_or_else(|| malformed(format!("statement '{id}' is not in the graph")))
}

fn neighbours(graph: &StatementGraph, id: &StatementId) -> BTreeSet<StatementId> {
    graph
        .attackers_of(id)
        .iter()
        .chain(graph.supporters_of(id).iter())
        .cloned()
        .collect()
}

/// Modified extends base by exactly the added statement; shared statements
/// and weights are identical, and the edge delta touches only the addition.
fn expect_extension(
    base: &StatementGraph,
    modified: &StatementGraph,
    added: &StatementId,
) -> Result<(), PropertyError> {
    if base.contains(added) {
        return Err(malformed(format!("'{added}' is already in the base graph")));
    }
    if modified.len() != base.len() + 1 || !modified.contains(added) {
        return Err(malformed(
            "modified graph must extend the base graph by the added statement",
        ));
    }
    for st in base.statements() {
        let other = statement_of(modified, st.id())?;
        if other != st {
            return Err(malformed(format!("statement '{}' differs", st.id())));
        }
        if base.weight(st.id()) != modified.weight(st.id()) {
            return Err(malformed(format!("weight of '{}' differs", st.id())));
        }
    }
    if let Some((from, to)) = base.attacks().difference(modified.attacks()).next() {
        return Err(malformed(format!("attack {from} -> {to} disappeared")));
    }
    if let Some((from, to)) = base.supports().difference(modified.supports()).next() {
        return Err(malformed(format!("support {from} -> {to} disappeared")));
    }
    let new_attacks = modified.attacks().difference(base.attacks());
    let new_supports = modified.supports().difference(base.supports());
    for (from, to) in new_attacks.chain(new_supports) {
        if from != added && to != added {
            return Err(malformed(format!(
                "edge {from} -> {to} does not involve the added statement"
            )));
        }
    }
    Ok(())
}

/// Base and modified hold the same statements; only weights may differ.
fn expect_same_statements(
    base: &StatementGraph,
    modified: &StatementGraph,
) -> Result<(), PropertyError> {
    if base.len() != modified.len() {
        return Err(malformed("graphs must hold the same statements"));
    }
    for st in base.statements() {
        let other = statement_of(modified, st.id())?;
        if other != st {
            return Err(malformed(format!("statement '{}' differs", st.id())));
        }
    }
    Ok(())
}

fn expect_weights_equal_except(
    base: &StatementGraph,
    modified: &StatementGraph,
    exceptions: &[&StatementId],
) -> Result<(), PropertyError> {
    for id in base.ids() {
        if exceptions.contains(&id) {
            continue;
        }
        if base.weight(id) != modified.weight(id) {
            return Err(malformed(format!(
                "weight of '{id}' changed outside the allowed set"
            )));
        }
    }
    Ok(())
}

type Trees = BTreeMap<StatementId, Vec<CompleteSupportTree>>;

fn trees_of(graph: &StatementGraph) -> Result<Trees, PropertyError> {
    all_csts(graph, DEFAULT_TREE_CAP).map_err(|e| PropertyError::Eval(e.into()))
}

/// True iff some tree containing `member` attacks some tree of `focus`.
fn member_attacks_focus_trees(
    graph: &StatementGraph,
    trees: &Trees,
    member: &StatementId,
    focus: &StatementId,
    skip_roots: &[&StatementId],
) -> bool {
    trees.iter().any(|(root, root_trees)| {
        if skip_roots.contains(&root) {
            return false;
        }
        root_trees.iter().any(|candidate| {
            candidate.contains(member)
                && trees[focus]
                    .iter()
                    .any(|target| tree_attacks(graph, candidate, target))
        })
    })
}

/// Re-checks the structural side conditions of the scenario's property.
pub fn validate_scenario(scenario: &Scenario) -> Result<(), PropertyError> {
    match scenario.property {
        PropertyId::Directionality => {
            let (base, modified) = pair(scenario)?;
            let added = scenario.role("added")?;
            let focus = scenario.role("focus")?;
            expect_extension(base, modified, added)?;
            statement_of(base, focus)?;
            if modified
                .exists_path(added, focus, PathRelation::Any)
                .map_err(PropertyError::Model)?
            {
                return Err(malformed(format!(
                    "a path leads from '{added}' to '{focus}'"
                )));
            }
            Ok(())
        }
        PropertyId::Rewriting => {
            let g = single(scenario)?;
            let direct = statement_of(g, scenario.role("direct")?)?;
            let bridge = statement_of(g, scenario.role("bridge")?)?;
            let chained = statement_of(g, scenario.role("chained")?)?;
            if direct.claim() != chained.claim() {
                return Err(malformed("direct and chained must share a claim"));
            }
            let p1: BTreeSet<&Literal> = direct.prem().collect();
            let p2: BTreeSet<&Literal> = bridge.prem().collect();
            let p3: BTreeSet<&Literal> = chained.prem().collect();
            let linker = bridge.claim();
            if p3.len() != 2 || !p3.contains(linker) {
                return Err(malformed(
                    "chained premise must be the bridge claim plus one literal",
                ));
            }
            let tail: &Literal = p3
                .iter()
                .copied()
                .find(|l| *l != linker)
                .expect("two-literal premise");
            if !p1.contains(tail) {
                return Err(malformed(
                    "the extra literal must come from the direct premise",
                ));
            }
            let mut shared = p1.clone();
            shared.remove(tail);
            if shared != p2 || p2.is_empty() {
                return Err(malformed(
                    "bridge premise must be the direct premise minus the extra literal",
                ));
            }
            if p1.iter().any(|l| l.atom() == linker.atom()) {
                return Err(malformed("bridge claim atom occurs in the direct premise"));
            }
            for st in g.statements() {
                if [direct.id(), bridge.id(), chained.id()].contains(&st.id()) {
                    continue;
                }
                if st.claim().atom() == linker.atom()
                    || st.prem().any(|l| l.atom() == linker.atom())
                {
                    return Err(malformed(format!(
                        "bridge claim atom '{}' is not fresh",
                        linker.atom()
                    )));
                }
            }
            if g.weight(direct.id()) != g.weight(chained.id()) {
                return Err(malformed("direct and chained must have equal weights"));
            }
            if g.weight(bridge.id()) != Some(1.0) {
                return Err(malformed("bridge weight must be 1"));
            }
            Ok(())
        }
        PropertyId::Provability | PropertyId::WeakProvability => {
            let g = single(scenario)?;
            let focus = statement_of(g, scenario.role("focus")?)?;
            let unsupported = focus
                .prem()
                .any(|x| !g.statements().any(|st| st.claim() == x));
            if focus.premise().is_top() || !unsupported {
                return Err(malformed(
                    "focus needs a premise literal no statement claims",
                ));
            }
            if scenario.property == PropertyId::WeakProvability && g.weight(focus.id()) != Some(0.0)
            {
                return Err(malformed("focus weight must be 0"));
            }
            Ok(())
        }
        PropertyId::Stability => {
            let g = single(scenario)?;
            let focus = scenario.role("focus")?;
            statement_of(g, focus)?;
            if !g.attackers_of(focus).is_empty() || !g.supporters_of(focus).is_empty() {
                return Err(malformed("focus must have no attackers or supporters"));
            }
            Ok(())
        }
        PropertyId::Neutrality => {
            let (base, modified) = pair(scenario)?;
            let added = scenario.role("added")?;
            let focus = scenario.role("focus")?;
            expect_extension(base, modified, added)?;
            statement_of(base, focus)?;
            let mut expected = neighbours(base, focus);
            expected.insert(added.clone());
            if neighbours(modified, focus) != expected {
                return Err(malformed(
                    "the focus neighbourhood must grow by exactly the added statement",
                ));
            }
            Ok(())
        }
        PropertyId::AttackedPremise | PropertyId::SupportedPremise => {
            let (base, modified) = pair(scenario)?;
            let added = scenario.role("added")?;
            let focus = scenario.role("focus")?;
            expect_extension(base, modified, added)?;
            statement_of(base, focus)?;
            let base_att: BTreeSet<_> = base.attackers_of(focus).iter().cloned().collect();
            let base_sup: BTreeSet<_> = base.supporters_of(focus).iter().cloned().collect();
            let mod_att: BTreeSet<_> = modified.attackers_of(focus).iter().cloned().collect();
            let mod_sup: BTreeSet<_> = modified.supporters_of(focus).iter().cloned().collect();
            let (grown, stable, grown_name) = if scenario.property == PropertyId::AttackedPremise {
                ((base_att, mod_att), (base_sup, mod_sup), "attackers")
            } else {
                ((base_sup, mod_sup), (base_att, mod_att), "supporters")
            };
            let mut expected = grown.0.clone();
            expected.insert(added.clone());
            if grown.1 != expected {
                return Err(malformed(format!(
                    "the focus {grown_name} must grow by exactly the added statement"
                )));
            }
            if stable.0 != stable.1 {
                return Err(malformed("the other neighbourhood side must not change"));
            }
            Ok(())
        }
        PropertyId::WeakenedPremise | PropertyId::StrengthenedPremise => {
            let (base, modified) = pair(scenario)?;
            let focus = scenario.role("focus")?;
            let changed = scenario.role("changed")?;
            expect_same_statements(base, modified)?;
            statement_of(base, focus)?;
            statement_of(base, changed)?;
            let side = if scenario.property == PropertyId::WeakenedPremise {
                base.attackers_of(focus)
            } else {
                base.supporters_of(focus)
            };
            if !side.contains(changed) {
                return Err(malformed(format!(
                    "'{changed}' must be on the relevant side of '{focus}'"
                )));
            }
            if base.weight(focus) != modified.weight(focus) {
                return Err(malformed("the focus weight must not change"));
            }
            Ok(())
        }
        PropertyId::BottomStrengthPremise | PropertyId::TopStrengthPremises => {
            let g = single(scenario)?;
            let focus = statement_of(g, scenario.role("focus")?)?;
            if focus.premise().is_top() {
                return Err(malformed("focus needs a non-empty premise"));
            }
            Ok(())
        }
        PropertyId::Mirroring => {
            let g = single(scenario)?;
            let left = statement_of(g, scenario.role("left")?)?;
            let right = statement_of(g, scenario.role("right")?)?;
            if left.id() == right.id() {
                return Err(malformed("mirroring needs two distinct statements"));
            }
            let lits: Vec<&Literal> = left.prem().chain(right.prem()).collect();
            if left.premise().len() != 1 || right.premise().len() != 1 {
                return Err(malformed("mirrored premises must be single literals"));
            }
            if lits[0].negate().ok().as_ref() != Some(lits[1]) {
                return Err(malformed("the premises must negate each other"));
            }
            if g.weight(left.id()) != Some(0.5) || g.weight(right.id()) != Some(0.5) {
                return Err(malformed("both weights must be exactly 0.5"));
            }
            Ok(())
        }
        PropertyId::AttackReinforcement | PropertyId::SupportReinforcement => {
            let (base, modified) = pair(scenario)?;
            let focus = scenario.role("focus")?;
            let changed = scenario.role("changed")?;
            expect_same_statements(base, modified)?;
            statement_of(base, focus)?;
            statement_of(base, changed)?;
            if focus == changed {
                return Err(malformed("focus and changed must differ"));
            }
            if modified.weight(changed) < base.weight(changed) {
                return Err(malformed("the changed weight must not decrease"));
            }
            expect_weights_equal_except(base, modified, &[changed])?;
            let trees = trees_of(base)?;
            let in_focus_tree = trees[focus].iter().any(|t| t.contains(changed));
            let in_attacking_tree =
                member_attacks_focus_trees(base, &trees, changed, focus, &[changed, focus]);
            if scenario.property == PropertyId::AttackReinforcement {
                if in_focus_tree {
                    return Err(malformed("'changed' may not ground the focus"));
                }
                if !in_attacking_tree {
                    return Err(malformed(
                        "'changed' must sit in a tree attacking the focus trees",
                    ));
                }
            } else {
                if !in_focus_tree {
                    return Err(malformed("'changed' must ground the focus"));
                }
                if member_attacks_focus_trees(base, &trees, changed, focus, &[]) {
                    return Err(malformed(
                        "'changed' may not sit in any tree attacking the focus trees",
                    ));
                }
            }
            Ok(())
        }
        PropertyId::AttackMonotonicity | PropertyId::SupportMonotonicity => {
            let (base, modified) = pair(scenario)?;
            let added = scenario.role("added")?;
            let focus = scenario.role("focus")?;
            expect_extension(base, modified, added)?;
            statement_of(base, focus)?;
            let trees = trees_of(modified)?;
            let in_focus_tree = trees[focus].iter().any(|t| t.contains(added));
            if scenario.property == PropertyId::AttackMonotonicity {
                if in_focus_tree {
                    return Err(malformed("'added' may not ground the focus"));
                }
                if !member_attacks_focus_trees(modified, &trees, added, focus, &[added, focus]) {
                    return Err(malformed(
                        "'added' must sit in a tree attacking the focus trees",
                    ));
                }
            } else {
                if !in_focus_tree {
                    return Err(malformed("'added' must ground the focus"));
                }
                if member_attacks_focus_trees(modified, &trees, added, focus, &[]) {
                    return Err(malformed(
                        "'added' may not sit in any tree attacking the focus trees",
                    ));
                }
            }
            Ok(())
        }
    }
}

struct Evaluated {
    base: BTreeMap<StatementId, f64>,
    modified: Option<BTreeMap<StatementId, f64>>,
}

impl Evaluated {
    fn of(semantics: Semantics, scenario: &Scenario) -> Result<Self, PropertyError> {
        Ok(Evaluated {
            base: semantics.evaluate(&scenario.base)?,
            modified: scenario
                .modified
                .as_ref()
                .map(|g| semantics.evaluate(g))
                .transpose()?,
        })
    }

    fn base_of(&self, id: &StatementId) -> f64 {
        self.base[id]
    }

    fn modified_of(&self, id: &StatementId) -> f64 {
        self.modified.as_ref().expect("graph pair")[id]
    }

    fn flatten(&self) -> BTreeMap<String, f64> {
        let mut out = BTreeMap::new();
        match &self.modified {
            None => {
                for (id, v) in &self.base {
                    out.insert(id.to_string(), *v);
                }
            }
            Some(modified) => {
                for (id, v) in &self.base {
                    out.insert(format!("base:{id}"), *v);
                }
                for (id, v) in modified {
                    out.insert(format!("mod:{id}"), *v);
                }
            }
        }
        out
    }
}

fn violation(scenario: &Scenario, evaluated: &Evaluated, clause: String) -> CheckOutcome {
    CheckOutcome {
        verdict: PropertyVerdict {
            status: VerdictStatus::Violated,
            witness: Some(Witness {
                scenario: scenario.clone(),
                strengths: evaluated.flatten(),
                clause,
            }),
        },
        antecedent_met: true,
    }
}

fn holds() -> CheckOutcome {
    CheckOutcome {
        verdict: PropertyVerdict::holds(),
        antecedent_met: true,
    }
}

fn vacuous() -> CheckOutcome {
    CheckOutcome {
        verdict: PropertyVerdict::holds(),
        antecedent_met: false,
    }
}

/// Whether each prior neighbour of `focus` keeps its strength across the
/// two graphs.
fn neighbours_stable(
    scenario: &Scenario,
    evaluated: &Evaluated,
    focus: &StatementId,
    except: Option<&StatementId>,
    tol: f64,
) -> bool {
    neighbours(&scenario.base, focus)
        .iter()
        .filter(|id| Some(*id) != except)
        .all(|id| eq(evaluated.base_of(id), evaluated.modified_of(id), tol))
}

pub(crate) fn check_property_detailed(
    property: PropertyId,
    semantics: Semantics,
    scenario: &Scenario,
    tol: f64,
) -> Result<CheckOutcome, PropertyError> {
    if property != scenario.property {
        return Err(malformed(format!(
            "scenario was built for {}, not {property}",
            scenario.property
        )));
    }
    if !property.applicable_to(semantics) {
        return Ok(CheckOutcome {
            verdict: PropertyVerdict::not_applicable(),
            antecedent_met: false,
        });
    }
    validate_scenario(scenario)?;
    let evaluated = Evaluated::of(semantics, scenario)?;

    let outcome = match property {
        PropertyId::Directionality => {
            let focus = scenario.role("focus")?;
            let before = evaluated.base_of(focus);
            let after = evaluated.modified_of(focus);
            if eq(before, after, tol) {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("unreachable '{focus}' moved from {before} to {after}"),
                )
            }
        }
        PropertyId::Rewriting => {
            let direct = scenario.role("direct")?;
            let chained = scenario.role("chained")?;
            let a = evaluated.base_of(direct);
            let b = evaluated.base_of(chained);
            if eq(a, b, tol) {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("'{direct}' scored {a} but '{chained}' scored {b}"),
                )
            }
        }
        PropertyId::Provability | PropertyId::WeakProvability => {
            let focus = scenario.role("focus")?;
            let s = evaluated.base_of(focus);
            if eq(s, 0.0, tol) {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("unsupported '{focus}' scored {s} instead of 0"),
                )
            }
        }
        PropertyId::Stability => {
            let focus = scenario.role("focus")?;
            let s = evaluated.base_of(focus);
            let w = scenario.base.weight(focus).expect("validated");
            if eq(s, w, tol) {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("isolated '{focus}' scored {s} instead of its weight {w}"),
                )
            }
        }
        PropertyId::Neutrality => {
            let focus = scenario.role("focus")?;
            let added = scenario.role("added")?;
            if !eq(evaluated.modified_of(added), 0.0, tol)
                || !neighbours_stable(scenario, &evaluated, focus, None, tol)
            {
                vacuous()
            } else {
                let before = evaluated.base_of(focus);
                let after = evaluated.modified_of(focus);
                if eq(before, after, tol) {
                    holds()
                } else {
                    violation(
                        scenario,
                        &evaluated,
                        format!("zero-strength '{added}' moved '{focus}' from {before} to {after}"),
                    )
                }
            }
        }
        PropertyId::AttackedPremise | PropertyId::SupportedPremise => {
            let focus = scenario.role("focus")?;
            if !neighbours_stable(scenario, &evaluated, focus, None, tol) {
                vacuous()
            } else {
                let before = evaluated.base_of(focus);
                let after = evaluated.modified_of(focus);
                let fine = if property == PropertyId::AttackedPremise {
                    after <= before + tol
                } else {
                    after >= before - tol
                };
                if fine {
                    holds()
                } else {
                    violation(
                        scenario,
                        &evaluated,
                        format!("'{focus}' moved from {before} to {after}"),
                    )
                }
            }
        }
        PropertyId::WeakenedPremise | PropertyId::StrengthenedPremise => {
            let focus = scenario.role("focus")?;
            let changed = scenario.role("changed")?;
            let strictly_up = evaluated.modified_of(changed) > evaluated.base_of(changed) + tol;
            if !strictly_up || !neighbours_stable(scenario, &evaluated, focus, Some(changed), tol) {
                vacuous()
            } else {
                let before = evaluated.base_of(focus);
                let after = evaluated.modified_of(focus);
                let fine = if property == PropertyId::WeakenedPremise {
                    after <= before + tol
                } else {
                    after >= before - tol
                };
                if fine {
                    holds()
                } else {
                    violation(
                        scenario,
                        &evaluated,
                        format!("'{focus}' moved from {before} to {after}"),
                    )
                }
            }
        }
        PropertyId::BottomStrengthPremise => {
            let focus_id = scenario.role("focus")?.clone();
            let focus = scenario.base.statement(&focus_id).expect("validated");
            let crushed = focus.prem().any(|x| {
                let top_attacker = scenario.base.attackers_of(&focus_id).iter().any(|a| {
                    let claim = scenario.base.statement(a).expect("graph member").claim();
                    claim.negate().ok().as_ref() == Some(x) && eq(evaluated.base_of(a), 1.0, tol)
                });
                let unsupported = scenario
                    .base
                    .supporters_of(&focus_id)
                    .iter()
                    .filter(|s| scenario.base.statement(s).expect("graph member").claim() == x)
                    .all(|s| evaluated.base_of(s) <= tol);
                top_attacker && unsupported
            });
            if !crushed {
                vacuous()
            } else {
                let s = evaluated.base_of(&focus_id);
                if eq(s, 0.0, tol) {
                    holds()
                } else {
                    violation(
                        scenario,
                        &evaluated,
                        format!("fully contradicted '{focus_id}' scored {s} instead of 0"),
                    )
                }
            }
        }
        PropertyId::TopStrengthPremises => {
            let focus_id = scenario.role("focus")?.clone();
            let focus = scenario.base.statement(&focus_id).expect("validated");
            let all_topped = focus.prem().all(|x| {
                let unopposed = scenario
                    .base
                    .attackers_of(&focus_id)
                    .iter()
                    .filter(|a| {
                        scenario
                            .base
                            .statement(a)
                            .expect("graph member")
                            .claim()
                            .negate()
                            .ok()
                            .as_ref()
                            == Some(x)
                    })
                    .all(|a| evaluated.base_of(a) <= tol);
                let topped = scenario.base.supporters_of(&focus_id).iter().any(|s| {
                    scenario.base.statement(s).expect("graph member").claim() == x
                        && eq(evaluated.base_of(s), 1.0, tol)
                });
                unopposed && topped
            });
            if !all_topped {
                vacuous()
            } else {
                let s = evaluated.base_of(&focus_id);
                if eq(s, 1.0, tol) {
                    holds()
                } else {
                    violation(
                        scenario,
                        &evaluated,
                        format!("fully backed '{focus_id}' scored {s} instead of 1"),
                    )
                }
            }
        }
        PropertyId::Mirroring => {
            let left = scenario.role("left")?;
            let right = scenario.role("right")?;
            let a = evaluated.base_of(left);
            let b = evaluated.base_of(right);
            if eq(a, 1.0 - b, tol) {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("'{left}' scored {a}, '{right}' scored {b}; they do not mirror"),
                )
            }
        }
        PropertyId::AttackReinforcement | PropertyId::AttackMonotonicity => {
            let focus = scenario.role("focus")?;
            let before = evaluated.base_of(focus);
            let after = evaluated.modified_of(focus);
            if after <= before + tol {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("'{focus}' rose from {before} to {after} under a stronger attack"),
                )
            }
        }
        PropertyId::SupportReinforcement | PropertyId::SupportMonotonicity => {
            let focus = scenario.role("focus")?;
            let before = evaluated.base_of(focus);
            let after = evaluated.modified_of(focus);
            if after >= before - tol {
                holds()
            } else {
                violation(
                    scenario,
                    &evaluated,
                    format!("'{focus}' fell from {before} to {after} under stronger support"),
                )
            }
        }
    };
    Ok(outcome)
}

/// Checks one property instance for one semantics. Incompatible pairs
/// report `NotApplicable`; malformed scenarios are errors.
pub fn check_property(
    property: PropertyId,
    semantics: Semantics,
    scenario: &Scenario,
    tolerance: f64,
) -> Result<PropertyVerdict, PropertyError> {
    check_property_detailed(property, semantics, scenario, tolerance).map(|o| o.verdict)
}

/// Greedily drops statements while the violation persists.
pub(crate) fn minimize_witness(
    property: PropertyId,
    semantics: Semantics,
    scenario: &Scenario,
    tol: f64,
) -> Scenario {
    let mut current = scenario.clone();
    loop {
        let mut shrunk = false;
        let candidates: Vec<StatementId> = current
            .base
            .ids()
            .filter(|id| !current.roles.values().any(|r| r == *id))
            .cloned()
            .collect();
        for id in candidates {
            let Ok(base) = current.base.without(&id) else {
                continue;
            };
            let modified = match &current.modified {
                None => None,
                Some(m) => match m.without(&id) {
                    Ok(g) => Some(g),
                    Err(_) => continue,
                },
            };
            let candidate = Scenario {
                base,
                modified,
                ..current.clone()
            };
            if let Ok(outcome) = check_property_detailed(property, semantics, &candidate, tol) {
                if outcome.verdict.status == VerdictStatus::Violated {
                    current = candidate;
                    shrunk = true;
                }
            }
        }
        if !shrunk {
            return current;
        }
    }
}
