//! Randomised scenario construction. Each property gets a planted motif
//! that realises its side conditions, dropped into a random surrounding
//! graph. Planted statements use ids `p0..` and fresh atoms `m0..`, so they
//! never collide with the random graph's `s*` ids and `a*`/`u*` atoms.

use std::collections::BTreeMap;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Literal, Statement, StatementGraph, StatementId};
use crate::random::{random_graph, random_weight, GraphConfig};

use super::check::validate_scenario;
use super::{ChangeDescriptor, PropertyError, PropertyId, Scenario};

const ATTEMPTS: usize = 300;

/// Builds a scenario whose side conditions hold by construction, or
/// reports the property unrealizable within the configured bounds.
/// Deterministic for a given config and seed.
pub fn random_scenario(
    property: PropertyId,
    config: &GraphConfig,
    seed: u64,
) -> Result<Scenario, PropertyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        if let Some(scenario) = try_build(property, config, &mut rng) {
            if validate_scenario(&scenario).is_ok() {
                return Ok(scenario);
            }
        }
    }
    Err(PropertyError::Unrealizable { property })
}

fn sid(id: &str) -> StatementId {
    StatementId::new(id).expect("generated ids are valid")
}

fn lit(atom: &str, negated: bool) -> Literal {
    Literal::new(atom, negated).expect("generated atoms are valid")
}

fn roles(pairs: &[(&str, &StatementId)]) -> BTreeMap<String, StatementId> {
    pairs
        .iter()
        .map(|(name, id)| (name.to_string(), (*id).clone()))
        .collect()
}

/// A claim literal occurring in the graph, optionally flipped.
fn base_literal<R: Rng>(rng: &mut R, graph: &StatementGraph) -> Option<Literal> {
    let claims: Vec<Literal> = graph.statements().map(|st| st.claim().clone()).collect();
    if claims.is_empty() {
        return None;
    }
    let chosen = claims[rng.random_range(0..claims.len())].clone();
    if rng.random_bool(0.3) {
        chosen.negate().ok()
    } else {
        Some(chosen)
    }
}

fn orphan_literal<R: Rng>(rng: &mut R) -> Literal {
    lit(
        &format!("u{}", rng.random_range(0..4)),
        rng.random_bool(0.3),
    )
}

/// Extra premise literals drawn from the base graph's claims, with atoms
/// distinct from each other and from `reserved`.
fn extra_literals<R: Rng>(
    rng: &mut R,
    graph: &StatementGraph,
    max: usize,
    reserved: &[&str],
) -> Vec<Literal> {
    let mut extras: Vec<Literal> = Vec::new();
    let count = rng.random_range(0..=max);
    for _ in 0..count {
        let Some(candidate) = base_literal(rng, graph) else {
            break;
        };
        if reserved.contains(&candidate.atom())
            || extras.iter().any(|l| l.atom() == candidate.atom())
        {
            continue;
        }
        extras.push(candidate);
    }
    extras
}

/// A premise for a planted helper: the true premise, a base-claim literal,
/// or an orphan literal.
fn helper_premise<R: Rng>(rng: &mut R, graph: &StatementGraph) -> Vec<Literal> {
    match rng.random_range(0..10) {
        0..=5 => vec![Literal::top()],
        6..=7 => base_literal(rng, graph)
            .map(|l| vec![l])
            .unwrap_or_else(|| vec![Literal::top()]),
        _ => vec![orphan_literal(rng)],
    }
}

/// Weight with head-room for a strict increase.
fn bumpable_weight<R: Rng>(rng: &mut R) -> f64 {
    rng.random_range(0..=8) as f64 / 10.0
}

fn bumped<R: Rng>(rng: &mut R, weight: f64) -> f64 {
    let head = 1.0 - weight;
    (weight + head * rng.random_range(0.2..=1.0)).min(1.0)
}

fn add(graph: &StatementGraph, statement: Statement, weight: f64) -> Option<StatementGraph> {
    graph.with_added(statement, weight).ok()
}

fn try_build<R: Rng>(property: PropertyId, config: &GraphConfig, rng: &mut R) -> Option<Scenario> {
    match property {
        PropertyId::Directionality => {
            let base = random_graph(rng, config);
            let claim_rank = rng.random_range(0..config.atom_pool);
            let claim = lit(&format!("a{claim_rank}"), rng.random_bool(0.3));
            let premise = if claim_rank == 0 || rng.random_bool(0.4) {
                vec![Literal::top()]
            } else {
                vec![lit(
                    &format!("a{}", rng.random_range(0..claim_rank)),
                    rng.random_bool(0.3),
                )]
            };
            let added = Statement::make("p0", &premise, claim).ok()?;
            let added_id = added.id().clone();
            let modified = add(&base, added, random_weight(rng, config))?;
            let unreachable: Vec<&StatementId> = base
                .ids()
                .filter(|id| {
                    !modified
                        .exists_path(&added_id, id, crate::model::PathRelation::Any)
                        .unwrap_or(true)
                })
                .collect();
            if unreachable.is_empty() {
                return None;
            }
            let focus = unreachable[rng.random_range(0..unreachable.len())].clone();
            Some(Scenario {
                property,
                base,
                modified: Some(modified),
                roles: roles(&[("focus", &focus), ("added", &added_id)]),
                change: Some(ChangeDescriptor::AddedStatement(added_id)),
            })
        }
        PropertyId::Rewriting => {
            let base = random_graph(rng, config);
            let shared = rng.random_range(1..=2usize);
            let mut picks: Vec<usize> = (0..config.atom_pool).collect();
            let mut atoms = Vec::new();
            for _ in 0..=shared {
                let i = rng.random_range(0..picks.len());
                atoms.push(picks.swap_remove(i));
            }
            let literals: Vec<Literal> = atoms
                .iter()
                .map(|i| lit(&format!("a{i}"), rng.random_bool(0.3)))
                .collect();
            let linker = lit("m0", false);
            let claim = lit("m1", rng.random_bool(0.3));
            let weight = random_weight(rng, config);

            let direct = Statement::make("p0", &literals, claim.clone()).ok()?;
            let bridge = Statement::make("p1", &literals[..shared], linker.clone()).ok()?;
            let mut chained_premise = vec![linker, literals[shared].clone()];
            chained_premise.sort();
            let chained = Statement::make("p2", &chained_premise, claim).ok()?;

            let g = add(&base, direct, weight)?;
            let g = add(&g, bridge, 1.0)?;
            let g = add(&g, chained, weight)?;
            Some(Scenario {
                property,
                base: g,
                modified: None,
                roles: roles(&[
                    ("direct", &sid("p0")),
                    ("bridge", &sid("p1")),
                    ("chained", &sid("p2")),
                ]),
                change: None,
            })
        }
        PropertyId::Provability | PropertyId::WeakProvability => {
            let base = random_graph(rng, config);
            let mut premise = vec![orphan_literal(rng)];
            premise.extend(extra_literals(
                rng,
                &base,
                config.max_premise_size.saturating_sub(1),
                &[premise[0].atom()],
            ));
            let focus = Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?;
            let focus_id = focus.id().clone();
            let weight = if property == PropertyId::WeakProvability {
                0.0
            } else {
                random_weight(rng, config)
            };
            let g = add(&base, focus, weight)?;
            Some(Scenario {
                property,
                base: g,
                modified: None,
                roles: roles(&[("focus", &focus_id)]),
                change: None,
            })
        }
        PropertyId::Stability => {
            let base = random_graph(rng, config);
            let focus = if rng.random_bool(0.5) {
                let atom = format!("a{}", rng.random_range(0..config.atom_pool));
                Statement::make("p0", &[Literal::top()], lit(&atom, rng.random_bool(0.3))).ok()?
            } else {
                let premise = vec![orphan_literal(rng)];
                Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?
            };
            let focus_id = focus.id().clone();
            let g = add(&base, focus, random_weight(rng, config))?;
            Some(Scenario {
                property,
                base: g,
                modified: None,
                roles: roles(&[("focus", &focus_id)]),
                change: None,
            })
        }
        PropertyId::Neutrality => {
            let mut base = random_graph(rng, config);
            let focus_id = match base
                .statements()
                .filter(|st| !st.premise().is_top())
                .map(|st| st.id().clone())
                .collect::<Vec<_>>()
            {
                ids if !ids.is_empty() && rng.random_bool(0.7) => {
                    ids[rng.random_range(0..ids.len())].clone()
                }
                _ => {
                    let mut premise = vec![orphan_literal(rng)];
                    premise.extend(extra_literals(rng, &base, 1, &[premise[0].atom()]));
                    let planted =
                        Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?;
                    let id = planted.id().clone();
                    base = add(&base, planted, random_weight(rng, config))?;
                    id
                }
            };
            let focus_premise: Vec<Literal> = base
                .statement(&focus_id)
                .expect("chosen from the graph")
                .prem()
                .cloned()
                .collect();
            let target = focus_premise[rng.random_range(0..focus_premise.len())].clone();
            let claim = if rng.random_bool(0.5) {
                target
            } else {
                target.negate().ok()?
            };
            let premise = if rng.random_bool(0.5) {
                vec![Literal::top()]
            } else {
                vec![orphan_literal(rng)]
            };
            let added = Statement::make("p1", &premise, claim).ok()?;
            let added_id = added.id().clone();
            let modified = add(&base, added, 0.0)?;
            Some(Scenario {
                property,
                base,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("added", &added_id)]),
                change: Some(ChangeDescriptor::AddedStatement(added_id)),
            })
        }
        PropertyId::AttackedPremise | PropertyId::SupportedPremise => {
            let base = random_graph(rng, config);
            let exclusive = lit("m1", false);
            let mut premise = vec![exclusive.clone()];
            premise.extend(extra_literals(
                rng,
                &base,
                config.max_premise_size.saturating_sub(1),
                &["m1"],
            ));
            let focus = Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?;
            let focus_id = focus.id().clone();
            let g = add(&base, focus, random_weight(rng, config))?;

            let claim = if property == PropertyId::AttackedPremise {
                exclusive.negate().ok()?
            } else {
                exclusive
            };
            let added = Statement::make("p1", &helper_premise(rng, &base), claim).ok()?;
            let added_id = added.id().clone();
            let modified = add(&g, added, random_weight(rng, config))?;
            Some(Scenario {
                property,
                base: g,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("added", &added_id)]),
                change: Some(ChangeDescriptor::AddedStatement(added_id)),
            })
        }
        PropertyId::WeakenedPremise | PropertyId::StrengthenedPremise => {
            let base = random_graph(rng, config);
            let exclusive = lit("m1", false);
            let mut premise = vec![exclusive.clone()];
            premise.extend(extra_literals(
                rng,
                &base,
                config.max_premise_size.saturating_sub(1),
                &["m1"],
            ));
            let focus = Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;

            let claim = if property == PropertyId::WeakenedPremise {
                exclusive.negate().ok()?
            } else {
                exclusive.clone()
            };
            let changed_premise = if rng.random_bool(0.7) {
                vec![Literal::top()]
            } else {
                helper_premise(rng, &base)
            };
            let changed = Statement::make("p1", &changed_premise, claim).ok()?;
            let changed_id = changed.id().clone();
            let weight = bumpable_weight(rng);
            g = add(&g, changed, weight)?;
            if rng.random_bool(0.3) {
                let side = Statement::make("p2", &[Literal::top()], exclusive).ok()?;
                if let Some(extended) = add(&g, side, random_weight(rng, config)) {
                    g = extended;
                }
            }
            let modified = g.with_weight(&changed_id, bumped(rng, weight)).ok()?;
            Some(Scenario {
                property,
                base: g,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("changed", &changed_id)]),
                change: Some(ChangeDescriptor::Reweighted(vec![changed_id])),
            })
        }
        PropertyId::BottomStrengthPremise => {
            let base = random_graph(rng, config);
            let crushed = lit("m1", false);
            let mut premise = vec![crushed.clone()];
            premise.extend(extra_literals(
                rng,
                &base,
                config.max_premise_size.saturating_sub(1),
                &["m1"],
            ));
            let focus = Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;
            let attacker = Statement::make("p1", &[Literal::top()], crushed.negate().ok()?).ok()?;
            g = add(&g, attacker, 1.0)?;
            if rng.random_bool(0.4) {
                let hollow = Statement::make("p2", &[Literal::top()], crushed).ok()?;
                g = add(&g, hollow, 0.0)?;
            }
            Some(Scenario {
                property,
                base: g,
                modified: None,
                roles: roles(&[("focus", &focus_id)]),
                change: None,
            })
        }
        PropertyId::TopStrengthPremises => {
            let base = random_graph(rng, config);
            let count = rng.random_range(1..=config.max_premise_size.max(1));
            let premise: Vec<Literal> = (0..count)
                .map(|i| lit(&format!("m{}", i + 1), rng.random_bool(0.3)))
                .collect();
            let focus = Statement::make("p0", &premise, lit("m0", rng.random_bool(0.3))).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;
            let mut next = 1usize;
            for literal in &premise {
                let backer =
                    Statement::make(&format!("p{next}"), &[Literal::top()], literal.clone())
                        .ok()?;
                next += 1;
                g = add(&g, backer, 1.0)?;
                if rng.random_bool(0.3) {
                    let hollow = Statement::make(
                        &format!("p{next}"),
                        &[Literal::top()],
                        literal.negate().ok()?,
                    )
                    .ok()?;
                    next += 1;
                    g = add(&g, hollow, 0.0)?;
                }
            }
            Some(Scenario {
                property,
                base: g,
                modified: None,
                roles: roles(&[("focus", &focus_id)]),
                change: None,
            })
        }
        PropertyId::Mirroring => {
            let base = random_graph(rng, config);
            let pivot = lit("m0", false);
            let left =
                Statement::make("p0", std::slice::from_ref(&pivot), lit("m1", false)).ok()?;
            let right = Statement::make("p1", &[pivot.negate().ok()?], lit("m2", false)).ok()?;
            let left_id = left.id().clone();
            let right_id = right.id().clone();
            let mut g = add(&base, left, 0.5)?;
            g = add(&g, right, 0.5)?;
            let voices = rng.random_range(0..=3usize);
            for i in 0..voices {
                let claim = if rng.random_bool(0.5) {
                    pivot.clone()
                } else {
                    pivot.negate().ok()?
                };
                let voice =
                    Statement::make(&format!("p{}", 2 + i), &helper_premise(rng, &base), claim)
                        .ok()?;
                g = match add(&g, voice, random_weight(rng, config)) {
                    Some(extended) => extended,
                    None => continue,
                };
            }
            Some(Scenario {
                property,
                base: g,
                modified: None,
                roles: roles(&[("left", &left_id), ("right", &right_id)]),
                change: None,
            })
        }
        PropertyId::AttackReinforcement => {
            let base = random_graph(rng, config);
            let grounded = lit("m0", false);
            let focus =
                Statement::make("p0", std::slice::from_ref(&grounded), lit("m1", false)).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;
            g = add(
                &g,
                Statement::make("p1", &[Literal::top()], grounded.clone()).ok()?,
                random_weight(rng, config),
            )?;
            let carrier = lit("m2", false);
            g = add(
                &g,
                Statement::make(
                    "p2",
                    std::slice::from_ref(&carrier),
                    grounded.negate().ok()?,
                )
                .ok()?,
                random_weight(rng, config),
            )?;
            let changed = Statement::make("p3", &[Literal::top()], carrier).ok()?;
            let changed_id = changed.id().clone();
            let weight = bumpable_weight(rng);
            g = add(&g, changed, weight)?;
            if rng.random_bool(0.3) {
                if let Some(extra) = base_literal(rng, &base) {
                    if let Some(extended) = add(
                        &g,
                        Statement::make("p4", &[extra], grounded).ok()?,
                        random_weight(rng, config),
                    ) {
                        g = extended;
                    }
                }
            }
            let modified = g.with_weight(&changed_id, bumped(rng, weight)).ok()?;
            Some(Scenario {
                property,
                base: g,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("changed", &changed_id)]),
                change: Some(ChangeDescriptor::Reweighted(vec![changed_id])),
            })
        }
        PropertyId::SupportReinforcement => {
            let base = random_graph(rng, config);
            let grounded = lit("m0", false);
            let focus =
                Statement::make("p0", std::slice::from_ref(&grounded), lit("m1", false)).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;
            let changed = Statement::make("p1", &[Literal::top()], grounded.clone()).ok()?;
            let changed_id = changed.id().clone();
            let weight = bumpable_weight(rng);
            g = add(&g, changed, weight)?;
            if rng.random_bool(0.4) {
                let carrier = lit("m3", false);
                g = add(
                    &g,
                    Statement::make(
                        "p2",
                        std::slice::from_ref(&carrier),
                        grounded.negate().ok()?,
                    )
                    .ok()?,
                    random_weight(rng, config),
                )?;
                if rng.random_bool(0.5) {
                    g = add(
                        &g,
                        Statement::make("p3", &[Literal::top()], carrier).ok()?,
                        random_weight(rng, config),
                    )?;
                }
            }
            let modified = g.with_weight(&changed_id, bumped(rng, weight)).ok()?;
            Some(Scenario {
                property,
                base: g,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("changed", &changed_id)]),
                change: Some(ChangeDescriptor::Reweighted(vec![changed_id])),
            })
        }
        PropertyId::AttackMonotonicity => {
            let base = random_graph(rng, config);
            let grounded = lit("m0", false);
            let focus =
                Statement::make("p0", std::slice::from_ref(&grounded), lit("m1", false)).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;
            g = add(
                &g,
                Statement::make("p1", &[Literal::top()], grounded.clone()).ok()?,
                random_weight(rng, config),
            )?;
            let carrier = lit("m2", false);
            g = add(
                &g,
                Statement::make(
                    "p2",
                    std::slice::from_ref(&carrier),
                    grounded.negate().ok()?,
                )
                .ok()?,
                random_weight(rng, config),
            )?;
            let added = Statement::make("p3", &[Literal::top()], carrier).ok()?;
            let added_id = added.id().clone();
            let modified = add(&g, added, random_weight(rng, config))?;
            Some(Scenario {
                property,
                base: g,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("added", &added_id)]),
                change: Some(ChangeDescriptor::AddedStatement(added_id)),
            })
        }
        PropertyId::SupportMonotonicity => {
            let base = random_graph(rng, config);
            let grounded = lit("m0", false);
            let focus =
                Statement::make("p0", std::slice::from_ref(&grounded), lit("m1", false)).ok()?;
            let focus_id = focus.id().clone();
            let mut g = add(&base, focus, random_weight(rng, config))?;
            if rng.random_bool(0.7) {
                g = add(
                    &g,
                    Statement::make("p1", &[Literal::top()], grounded.clone()).ok()?,
                    random_weight(rng, config),
                )?;
            }
            let carrier = lit("m3", false);
            g = add(
                &g,
                Statement::make("p2", &[Literal::top()], carrier.clone()).ok()?,
                random_weight(rng, config),
            )?;
            let added = Statement::make("p3", &[carrier], grounded).ok()?;
            let added_id = added.id().clone();
            let modified = add(&g, added, random_weight(rng, config))?;
            Some(Scenario {
                property,
                base: g,
                modified: Some(modified),
                roles: roles(&[("focus", &focus_id), ("added", &added_id)]),
                change: Some(ChangeDescriptor::AddedStatement(added_id)),
            })
        }
    }
}
