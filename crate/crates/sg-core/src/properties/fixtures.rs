//! Hand-pinned property instances: every counterexample behind a violated
//! matrix cell plus the worked evaluation examples, with their expected
//! strengths frozen. Exact values carry the internal tolerance; values
//! known only in rounded form carry 5e-3.

use std::collections::BTreeMap;

use crate::model::StatementId;
use crate::parse::parse_sg;
use crate::semantics::Semantics;

use super::check::check_property;
use super::{ChangeDescriptor, PropertyId, Scenario, VerdictStatus};

const EXACT: f64 = 1e-9;
const ROUNDED: f64 = 5e-3;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WhichGraph {
    Base,
    Modified,
}

#[derive(Clone, Debug)]
pub struct ExpectedStrength {
    pub graph: WhichGraph,
    pub id: &'static str,
    pub value: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub property: PropertyId,
    pub semantics: Semantics,
    pub scenario: Scenario,
    pub expected: VerdictStatus,
    pub expected_strengths: Vec<ExpectedStrength>,
}

#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub expected: VerdictStatus,
    pub actual: VerdictStatus,
    pub strength_issues: Vec<String>,
    pub pass: bool,
}

fn sid(id: &str) -> StatementId {
    StatementId::new(id).expect("fixture ids are valid")
}

fn graph(text: &str) -> crate::model::StatementGraph {
    parse_sg(text).expect("fixture text parses")
}

fn roles(pairs: &[(&str, &str)]) -> BTreeMap<String, StatementId> {
    pairs
        .iter()
        .map(|(name, id)| (name.to_string(), sid(id)))
        .collect()
}

fn single(property: PropertyId, text: &str, role_pairs: &[(&str, &str)]) -> Scenario {
    Scenario {
        property,
        base: graph(text),
        modified: None,
        roles: roles(role_pairs),
        change: None,
    }
}

fn added(
    property: PropertyId,
    base: &str,
    modified: &str,
    added_id: &str,
    role_pairs: &[(&str, &str)],
) -> Scenario {
    Scenario {
        property,
        base: graph(base),
        modified: Some(graph(modified)),
        roles: roles(role_pairs),
        change: Some(ChangeDescriptor::AddedStatement(sid(added_id))),
    }
}

fn reweighted(
    property: PropertyId,
    base: &str,
    modified: &str,
    changed: &[&str],
    role_pairs: &[(&str, &str)],
) -> Scenario {
    Scenario {
        property,
        base: graph(base),
        modified: Some(graph(modified)),
        roles: roles(role_pairs),
        change: Some(ChangeDescriptor::Reweighted(
            changed.iter().map(|id| sid(id)).collect(),
        )),
    }
}

fn want(graph: WhichGraph, id: &'static str, value: f64, tolerance: f64) -> ExpectedStrength {
    ExpectedStrength {
        graph,
        id,
        value,
        tolerance,
    }
}

use WhichGraph::{Base, Modified};

/// The four-statement running example, in its two weight readings.
const FIG07: &str = "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.7";
const FIG08: &str = "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\na4: d => ~a @ 0.8";

/// Every fixture of the suite. The expected verdicts and strengths are the
/// values the defining equations actually produce, double-checked by the
/// independent oracles in the test suite.
pub fn fixture_suite() -> Vec<Fixture> {
    let mut fixtures = Vec::new();

    // Evaluation of the running example, pinned through the stability and
    // provability instances it contains.
    let fig_ext = format!("{FIG07}\na5: a => e @ 1\na6: e & b => c @ 0.8");
    fixtures.push(Fixture {
        name: "running-example-stability-dc-dfquad",
        property: PropertyId::Stability,
        semantics: Semantics::DcDfquad,
        scenario: single(PropertyId::Stability, FIG07, &[("focus", "a4")]),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "a4", 0.7, EXACT), want(Base, "a1", 0.877, 2e-3)],
    });
    fixtures.push(Fixture {
        name: "running-example-stability-tnorm-p",
        property: PropertyId::Stability,
        semantics: Semantics::TnormP,
        scenario: single(PropertyId::Stability, FIG07, &[("focus", "a4")]),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "a4", 0.0, EXACT), want(Base, "a1", 0.432, EXACT)],
    });
    fixtures.push(Fixture {
        name: "chain-length-rewriting-tnorm-p",
        property: PropertyId::Rewriting,
        semantics: Semantics::TnormP,
        scenario: single(
            PropertyId::Rewriting,
            &fig_ext,
            &[("direct", "a1"), ("bridge", "a5"), ("chained", "a6")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![
            want(Base, "a1", 0.432, EXACT),
            want(Base, "a6", 0.432, EXACT),
        ],
    });
    fixtures.push(Fixture {
        name: "chain-length-rewriting-dc-dfquad",
        property: PropertyId::Rewriting,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::Rewriting,
            &fig_ext,
            &[("direct", "a1"), ("bridge", "a5"), ("chained", "a6")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "a1", 0.877, ROUNDED),
            want(Base, "a6", 0.957, 2e-3),
        ],
    });
    fixtures.push(Fixture {
        name: "ungrounded-attacker-provability-tnorm-p",
        property: PropertyId::Provability,
        semantics: Semantics::TnormP,
        scenario: single(PropertyId::Provability, FIG07, &[("focus", "a4")]),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "a4", 0.0, EXACT)],
    });
    fixtures.push(Fixture {
        name: "ungrounded-attacker-provability-dc-dfquad",
        property: PropertyId::Provability,
        semantics: Semantics::DcDfquad,
        scenario: single(PropertyId::Provability, FIG07, &[("focus", "a4")]),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "a4", 0.7, EXACT)],
    });

    // A worthless fact attached to the ungrounded attacker.
    let fig08_neut = format!("{FIG08}\na7: T => d @ 0");
    fixtures.push(Fixture {
        name: "worthless-fact-neutrality-dc-dfquad",
        property: PropertyId::Neutrality,
        semantics: Semantics::DcDfquad,
        scenario: added(
            PropertyId::Neutrality,
            FIG08,
            &fig08_neut,
            "a7",
            &[("focus", "a4"), ("added", "a7")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![
            want(Base, "a4", 0.8, EXACT),
            want(Modified, "a4", 0.8, EXACT),
            want(Modified, "a7", 0.0, EXACT),
        ],
    });
    fixtures.push(Fixture {
        name: "worthless-fact-neutrality-tnorm-p",
        property: PropertyId::Neutrality,
        semantics: Semantics::TnormP,
        scenario: added(
            PropertyId::Neutrality,
            FIG08,
            &fig08_neut,
            "a7",
            &[("focus", "a4"), ("added", "a7")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![
            want(Base, "a4", 0.0, EXACT),
            want(Modified, "a4", 0.0, EXACT),
        ],
    });

    // A conjunct fully contradicted by a certain fact.
    let contradicted_pre = format!("{FIG08}\na5: a => e @ 1\na8: e & f => ~b @ 0.5");
    let contradicted = format!("{contradicted_pre}\na9: T => ~f @ 1");
    fixtures.push(Fixture {
        name: "contradicted-conjunct-provability-dc-dfquad",
        property: PropertyId::Provability,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::Provability,
            &contradicted_pre,
            &[("focus", "a8")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "a8", 0.707, ROUNDED)],
    });
    fixtures.push(Fixture {
        name: "contradicted-conjunct-bottom-strength-dc-dfquad",
        property: PropertyId::BottomStrengthPremise,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::BottomStrengthPremise,
            &contradicted,
            &[("focus", "a8")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "a8", 0.0, EXACT)],
    });

    // A fully backed single-literal premise.
    const FULLY_BACKED: &str = "a5: a => e @ 0.8\na2: T => a @ 1";
    fixtures.push(Fixture {
        name: "fully-backed-top-strength-dc-dfquad",
        property: PropertyId::TopStrengthPremises,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::TopStrengthPremises,
            FULLY_BACKED,
            &[("focus", "a5")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "a5", 1.0, EXACT)],
    });
    fixtures.push(Fixture {
        name: "fully-backed-top-strength-tnorm-p",
        property: PropertyId::TopStrengthPremises,
        semantics: Semantics::TnormP,
        scenario: single(
            PropertyId::TopStrengthPremises,
            FULLY_BACKED,
            &[("focus", "a5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "a5", 0.8, EXACT)],
    });

    // Opposed single-literal premises with balanced weights.
    const OPPOSED: &str =
        "a5: a => e @ 0.5\na10: ~a => ~e @ 0.5\na2: T => a @ 0.9\na4: d => ~a @ 0.8";
    fixtures.push(Fixture {
        name: "opposed-premises-mirroring-dc-dfquad",
        property: PropertyId::Mirroring,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::Mirroring,
            OPPOSED,
            &[("left", "a5"), ("right", "a10")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![
            want(Base, "a5", 0.55, ROUNDED),
            want(Base, "a10", 0.45, ROUNDED),
        ],
    });
    fixtures.push(Fixture {
        name: "opposed-premises-mirroring-tnorm-p",
        property: PropertyId::Mirroring,
        semantics: Semantics::TnormP,
        scenario: single(
            PropertyId::Mirroring,
            OPPOSED,
            &[("left", "a5"), ("right", "a10")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![],
    });

    // A lone, ungrounded statement with full weight.
    const LONE: &str = "s1: b => a @ 1";
    fixtures.push(Fixture {
        name: "lone-statement-stability-dc-dfquad",
        property: PropertyId::Stability,
        semantics: Semantics::DcDfquad,
        scenario: single(PropertyId::Stability, LONE, &[("focus", "s1")]),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "s1", 1.0, EXACT)],
    });
    for semantics in [Semantics::TnormP, Semantics::TnormM] {
        fixtures.push(Fixture {
            name: match semantics {
                Semantics::TnormP => "lone-statement-stability-tnorm-p",
                _ => "lone-statement-stability-tnorm-m",
            },
            property: PropertyId::Stability,
            semantics,
            scenario: single(PropertyId::Stability, LONE, &[("focus", "s1")]),
            expected: VerdictStatus::Violated,
            expected_strengths: vec![want(Base, "s1", 0.0, EXACT)],
        });
    }

    // A zero-strength attacker that still halves a certain statement.
    const NEUT_BASE: &str =
        "b1: a => b @ 1\nb2: T => a @ 1\nb3: T => c @ 1\nb4: d => ~c @ 1\nb5: T => d @ 1";
    let neut_mod = format!("{NEUT_BASE}\nb6: c => ~a @ 0.5");
    for (name, semantics) in [
        ("hollow-attacker-neutrality-tnorm-p", Semantics::TnormP),
        ("hollow-attacker-neutrality-tnorm-m", Semantics::TnormM),
    ] {
        fixtures.push(Fixture {
            name,
            property: PropertyId::Neutrality,
            semantics,
            scenario: added(
                PropertyId::Neutrality,
                NEUT_BASE,
                &neut_mod,
                "b6",
                &[("focus", "b1"), ("added", "b6")],
            ),
            expected: VerdictStatus::Violated,
            expected_strengths: vec![
                want(Base, "b1", 1.0, EXACT),
                want(Modified, "b6", 0.0, EXACT),
                want(Modified, "b1", 0.5, EXACT),
            ],
        });
    }

    // Weakening an attacker's ground raises its strength yet lowers the
    // pressure it exerts through its support tree.
    const WEAK_P_BASE: &str = "w1: a & b => c @ 0.5\nw2: T => a @ 0.5\nw3: T => b @ 0.5\nw4: d => e @ 0.5\nw5: e => ~b @ 0.5\nw6: T => d @ 0.5\nw7: f => ~d @ 0.9\nw8: T => f @ 1";
    const WEAK_P_MOD: &str = "w1: a & b => c @ 0.5\nw2: T => a @ 0.5\nw3: T => b @ 0.5\nw4: d => e @ 0.4\nw5: e => ~b @ 0.5\nw6: T => d @ 0.5\nw7: f => ~d @ 0.5\nw8: T => f @ 1";
    fixtures.push(Fixture {
        name: "loosened-ground-weakened-premise-tnorm-p",
        property: PropertyId::WeakenedPremise,
        semantics: Semantics::TnormP,
        scenario: reweighted(
            PropertyId::WeakenedPremise,
            WEAK_P_BASE,
            WEAK_P_MOD,
            &["w4", "w7"],
            &[("focus", "w1"), ("changed", "w5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "w1", 0.1093, ROUNDED),
            want(Base, "w5", 0.0125, ROUNDED),
            want(Modified, "w1", 0.1125, ROUNDED),
            want(Modified, "w5", 0.05, ROUNDED),
        ],
    });

    const WEAK_M_BASE: &str = "w1: a & b => c @ 0.5\nw2: T => a @ 0.5\nw3: T => b @ 0.5\nw4: d => e @ 0.5\nw5: e => ~b @ 0.5\nw6: T => d @ 0.5\nw7: f => ~d @ 1\nw8: T => f @ 1";
    const WEAK_M_MOD: &str = "w1: a & b => c @ 0.5\nw2: T => a @ 0.5\nw3: T => b @ 0.5\nw4: d => e @ 0.4\nw5: e => ~b @ 0.4\nw6: T => d @ 0.4\nw7: f => ~d @ 0.1\nw8: T => f @ 0.1";
    fixtures.push(Fixture {
        // The min/max instantiation clamps this configuration flat; the
        // instance holds, unlike its product twin.
        name: "loosened-ground-weakened-premise-tnorm-m-flat",
        property: PropertyId::WeakenedPremise,
        semantics: Semantics::TnormM,
        scenario: reweighted(
            PropertyId::WeakenedPremise,
            WEAK_M_BASE,
            WEAK_M_MOD,
            &["w4", "w5", "w6", "w7", "w8"],
            &[("focus", "w1"), ("changed", "w5")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![
            want(Base, "w1", 0.5, EXACT),
            want(Base, "w5", 0.0, EXACT),
            want(Modified, "w1", 0.5, EXACT),
            want(Modified, "w5", 0.4, EXACT),
        ],
    });

    const WEAK_M_WITNESS_BASE: &str = "w1: a & b => c @ 0.9\nw2: T => a @ 0.9\nw3: T => b @ 0.9\nw4: d => e @ 0.8\nw5: e => ~b @ 0.8\nw6: T => d @ 0.8\nw7: f => ~d @ 1\nw8: T => f @ 1";
    const WEAK_M_WITNESS_MOD: &str = "w1: a & b => c @ 0.9\nw2: T => a @ 0.9\nw3: T => b @ 0.9\nw4: d => e @ 0.5\nw5: e => ~b @ 0.5\nw6: T => d @ 0.5\nw7: f => ~d @ 0.3\nw8: T => f @ 0.3";
    fixtures.push(Fixture {
        name: "loosened-ground-weakened-premise-tnorm-m",
        property: PropertyId::WeakenedPremise,
        semantics: Semantics::TnormM,
        scenario: reweighted(
            PropertyId::WeakenedPremise,
            WEAK_M_WITNESS_BASE,
            WEAK_M_WITNESS_MOD,
            &["w4", "w5", "w6", "w7", "w8"],
            &[("focus", "w1"), ("changed", "w5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "w1", 0.2, EXACT),
            want(Base, "w5", 0.0, EXACT),
            want(Modified, "w1", 0.5, EXACT),
            want(Modified, "w5", 0.5, EXACT),
        ],
    });

    // Full support never outweighs a sub-maximal weight for the
    // support-tree semantics.
    const TOPS: &str = "t1: a => b @ 0.8\nt2: T => a @ 1";
    for (name, semantics) in [
        ("capped-weight-top-strength-tnorm-p", Semantics::TnormP),
        ("capped-weight-top-strength-tnorm-m", Semantics::TnormM),
    ] {
        fixtures.push(Fixture {
            name,
            property: PropertyId::TopStrengthPremises,
            semantics,
            scenario: single(PropertyId::TopStrengthPremises, TOPS, &[("focus", "t1")]),
            expected: VerdictStatus::Violated,
            expected_strengths: vec![want(Base, "t1", 0.8, EXACT), want(Base, "t2", 1.0, EXACT)],
        });
    }

    // Mirrored claims over a shared atom, all weights at one half.
    const MIRROR05: &str = "a1: a => b @ 0.5\na2: T => a @ 0.5\na3: ~a => c @ 0.5\na4: d => ~a @ 0.5\na5: T => d @ 0.5";
    fixtures.push(Fixture {
        name: "shared-atom-mirroring-tnorm-p",
        property: PropertyId::Mirroring,
        semantics: Semantics::TnormP,
        scenario: single(
            PropertyId::Mirroring,
            MIRROR05,
            &[("left", "a1"), ("right", "a3")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "a1", 0.1875, ROUNDED),
            want(Base, "a3", 0.0625, ROUNDED),
        ],
    });
    fixtures.push(Fixture {
        // With every weight at 0.5 the min/max instantiation cannot leave
        // {0, 0.5, 1}, so this configuration mirrors exactly.
        name: "shared-atom-mirroring-tnorm-m-flat",
        property: PropertyId::Mirroring,
        semantics: Semantics::TnormM,
        scenario: single(
            PropertyId::Mirroring,
            MIRROR05,
            &[("left", "a1"), ("right", "a3")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "a1", 0.5, EXACT), want(Base, "a3", 0.5, EXACT)],
    });
    fixtures.push(Fixture {
        name: "shared-atom-mirroring-dc-qem",
        property: PropertyId::Mirroring,
        semantics: Semantics::DcQem,
        scenario: single(
            PropertyId::Mirroring,
            MIRROR05,
            &[("left", "a1"), ("right", "a3")],
        ),
        expected: VerdictStatus::Holds,
        // The grounded attacker tilts both literals by h(0.1)/2; the two
        // scores still sum to one.
        expected_strengths: vec![
            want(Base, "a1", 0.495_049_504_950_495, EXACT),
            want(Base, "a3", 0.504_950_495_049_505, EXACT),
        ],
    });
    const MIRROR_M: &str = "a1: a => b @ 0.5\na2: T => a @ 0.9\na3: ~a => c @ 0.5\na4: d => ~a @ 0.7\na5: T => d @ 0.8";
    fixtures.push(Fixture {
        name: "shared-atom-mirroring-tnorm-m",
        property: PropertyId::Mirroring,
        semantics: Semantics::TnormM,
        scenario: single(
            PropertyId::Mirroring,
            MIRROR_M,
            &[("left", "a1"), ("right", "a3")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "a1", 0.3, EXACT), want(Base, "a3", 0.1, EXACT)],
    });

    // Restating a two-step derivation in one step changes dialectical
    // strengths.
    const REWRITE: &str = "r1: b & c => a @ 0.5\nr2: b => d @ 1\nr3: c & d => a @ 0.5";
    fixtures.push(Fixture {
        name: "two-step-derivation-rewriting-dc-dfquad",
        property: PropertyId::Rewriting,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::Rewriting,
            REWRITE,
            &[("direct", "r1"), ("bridge", "r2"), ("chained", "r3")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "r1", 0.5, EXACT),
            want(Base, "r2", 1.0, EXACT),
            want(Base, "r3", 0.71, ROUNDED),
        ],
    });
    fixtures.push(Fixture {
        name: "two-step-derivation-rewriting-dc-qem",
        property: PropertyId::Rewriting,
        semantics: Semantics::DcQem,
        scenario: single(
            PropertyId::Rewriting,
            REWRITE,
            &[("direct", "r1"), ("bridge", "r2"), ("chained", "r3")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "r1", 0.5, EXACT),
            want(Base, "r2", 1.0, EXACT),
            want(Base, "r3", 0.6, ROUNDED),
        ],
    });

    // A lone half-weight statement keeps its weight dialectically.
    const PROV: &str = "v1: b => a @ 0.5";
    for (name, semantics) in [
        ("lone-statement-provability-dc-dfquad", Semantics::DcDfquad),
        ("lone-statement-provability-dc-qem", Semantics::DcQem),
    ] {
        fixtures.push(Fixture {
            name,
            property: PropertyId::Provability,
            semantics,
            scenario: single(PropertyId::Provability, PROV, &[("focus", "v1")]),
            expected: VerdictStatus::Violated,
            expected_strengths: vec![want(Base, "v1", 0.5, EXACT)],
        });
    }

    // Saturation keeps the energy-based instantiation away from the
    // extremes that the conjunction expects.
    const CRUSHED: &str = "q1: b => a @ 0.5\nq2: T => ~b @ 1";
    fixtures.push(Fixture {
        name: "certain-attacker-bottom-strength-dc-qem",
        property: PropertyId::BottomStrengthPremise,
        semantics: Semantics::DcQem,
        scenario: single(
            PropertyId::BottomStrengthPremise,
            CRUSHED,
            &[("focus", "q1")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "q1", 0.25, EXACT), want(Base, "q2", 1.0, EXACT)],
    });
    fixtures.push(Fixture {
        name: "certain-attacker-bottom-strength-dc-dfquad",
        property: PropertyId::BottomStrengthPremise,
        semantics: Semantics::DcDfquad,
        scenario: single(
            PropertyId::BottomStrengthPremise,
            CRUSHED,
            &[("focus", "q1")],
        ),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "q1", 0.0, EXACT)],
    });
    const BACKED: &str = "q1: b => a @ 0.5\nq2: T => b @ 1";
    fixtures.push(Fixture {
        name: "certain-supporter-top-strength-dc-qem",
        property: PropertyId::TopStrengthPremises,
        semantics: Semantics::DcQem,
        scenario: single(PropertyId::TopStrengthPremises, BACKED, &[("focus", "q1")]),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![want(Base, "q1", 0.75, EXACT), want(Base, "q2", 1.0, EXACT)],
    });
    fixtures.push(Fixture {
        name: "certain-supporter-top-strength-dc-dfquad",
        property: PropertyId::TopStrengthPremises,
        semantics: Semantics::DcDfquad,
        scenario: single(PropertyId::TopStrengthPremises, BACKED, &[("focus", "q1")]),
        expected: VerdictStatus::Holds,
        expected_strengths: vec![want(Base, "q1", 1.0, EXACT)],
    });

    // Reinforcing the shared ground of an attacker helps its target.
    const AR_BASE: &str =
        "c1: b => a @ 0.5\nc2: T => b @ 0\nc3: c & d => b @ 0.5\nc4: c => ~b @ 1\nc5: T => c @ 0.5";
    const AR_MOD: &str =
        "c1: b => a @ 0.5\nc2: T => b @ 0\nc3: c & d => b @ 0.5\nc4: c => ~b @ 1\nc5: T => c @ 0.6";
    fixtures.push(Fixture {
        name: "shared-ground-attack-reinforcement-dc-dfquad",
        property: PropertyId::AttackReinforcement,
        semantics: Semantics::DcDfquad,
        scenario: reweighted(
            PropertyId::AttackReinforcement,
            AR_BASE,
            AR_MOD,
            &["c5"],
            &[("focus", "c1"), ("changed", "c5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.3, ROUNDED),
            want(Modified, "c1", 0.31, ROUNDED),
            want(Base, "c3", 0.6, ROUNDED),
            want(Modified, "c3", 0.62, ROUNDED),
            want(Base, "c4", 1.0, EXACT),
        ],
    });
    fixtures.push(Fixture {
        name: "shared-ground-attack-reinforcement-dc-qem",
        property: PropertyId::AttackReinforcement,
        semantics: Semantics::DcQem,
        scenario: reweighted(
            PropertyId::AttackReinforcement,
            AR_BASE,
            AR_MOD,
            &["c5"],
            &[("focus", "c1"), ("changed", "c5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.41, ROUNDED),
            want(Modified, "c1", 0.42, ROUNDED),
            want(Base, "c3", 0.54, ROUNDED),
            want(Modified, "c3", 0.55, ROUNDED),
        ],
    });

    const SR_BASE: &str =
        "c1: b => a @ 0.5\nc2: c => b @ 1\nc3: c & d => ~b @ 0.5\nc4: T => c @ 0.5";
    const SR_MOD: &str =
        "c1: b => a @ 0.5\nc2: c => b @ 1\nc3: c & d => ~b @ 0.5\nc4: T => c @ 0.6";
    fixtures.push(Fixture {
        name: "shared-ground-support-reinforcement-dc-dfquad",
        property: PropertyId::SupportReinforcement,
        semantics: Semantics::DcDfquad,
        scenario: reweighted(
            PropertyId::SupportReinforcement,
            SR_BASE,
            SR_MOD,
            &["c4"],
            &[("focus", "c1"), ("changed", "c4")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.7, ROUNDED),
            want(Modified, "c1", 0.69, ROUNDED),
            want(Base, "c3", 0.6, ROUNDED),
            want(Modified, "c3", 0.62, ROUNDED),
        ],
    });
    fixtures.push(Fixture {
        name: "shared-ground-support-reinforcement-dc-qem",
        property: PropertyId::SupportReinforcement,
        semantics: Semantics::DcQem,
        scenario: reweighted(
            PropertyId::SupportReinforcement,
            SR_BASE,
            SR_MOD,
            &["c4"],
            &[("focus", "c1"), ("changed", "c4")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.59, ROUNDED),
            want(Modified, "c1", 0.58, ROUNDED),
            want(Base, "c3", 0.54, ROUNDED),
            want(Modified, "c3", 0.55, ROUNDED),
        ],
    });

    const AM_BASE: &str = "c1: b => a @ 0.5\nc2: T => b @ 0\nc3: c & d => b @ 0.5\nc4: c => ~b @ 1";
    let am_mod = format!("{AM_BASE}\nc5: T => c @ 0.5");
    fixtures.push(Fixture {
        name: "new-shared-ground-attack-monotonicity-dc-dfquad",
        property: PropertyId::AttackMonotonicity,
        semantics: Semantics::DcDfquad,
        scenario: added(
            PropertyId::AttackMonotonicity,
            AM_BASE,
            &am_mod,
            "c5",
            &[("focus", "c1"), ("added", "c5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.25, ROUNDED),
            want(Modified, "c1", 0.3, ROUNDED),
            want(Base, "c3", 0.5, EXACT),
            want(Modified, "c3", 0.6, ROUNDED),
        ],
    });
    fixtures.push(Fixture {
        name: "new-shared-ground-attack-monotonicity-dc-qem",
        property: PropertyId::AttackMonotonicity,
        semantics: Semantics::DcQem,
        scenario: added(
            PropertyId::AttackMonotonicity,
            AM_BASE,
            &am_mod,
            "c5",
            &[("focus", "c1"), ("added", "c5")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.4, ROUNDED),
            want(Modified, "c1", 0.41, ROUNDED),
            want(Modified, "c3", 0.54, ROUNDED),
        ],
    });

    const SM_BASE: &str = "c1: b => a @ 0.5\nc2: c => b @ 1\nc3: c & d => ~b @ 0.5";
    let sm_mod = format!("{SM_BASE}\nc4: T => c @ 0.5");
    fixtures.push(Fixture {
        name: "new-shared-ground-support-monotonicity-dc-dfquad",
        property: PropertyId::SupportMonotonicity,
        semantics: Semantics::DcDfquad,
        scenario: added(
            PropertyId::SupportMonotonicity,
            SM_BASE,
            &sm_mod,
            "c4",
            &[("focus", "c1"), ("added", "c4")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.75, ROUNDED),
            want(Modified, "c1", 0.7, ROUNDED),
            want(Modified, "c3", 0.6, ROUNDED),
        ],
    });
    fixtures.push(Fixture {
        name: "new-shared-ground-support-monotonicity-dc-qem",
        property: PropertyId::SupportMonotonicity,
        semantics: Semantics::DcQem,
        scenario: added(
            PropertyId::SupportMonotonicity,
            SM_BASE,
            &sm_mod,
            "c4",
            &[("focus", "c1"), ("added", "c4")],
        ),
        expected: VerdictStatus::Violated,
        expected_strengths: vec![
            want(Base, "c1", 0.6, ROUNDED),
            want(Modified, "c1", 0.59, ROUNDED),
            want(Modified, "c3", 0.54, ROUNDED),
        ],
    });

    fixtures
}

/// Runs one fixture: the verdict must match and every pinned strength must
/// land within its tolerance.
pub fn run_fixture(fixture: &Fixture) -> FixtureOutcome {
    let actual = match check_property(fixture.property, fixture.semantics, &fixture.scenario, 1e-9)
    {
        Ok(verdict) => verdict.status,
        Err(e) => {
            return FixtureOutcome {
                name: fixture.name,
                expected: fixture.expected,
                actual: VerdictStatus::NotApplicable,
                strength_issues: vec![format!("check failed: {e}")],
                pass: false,
            };
        }
    };

    let mut strength_issues = Vec::new();
    let base_strengths = fixture.semantics.evaluate(&fixture.scenario.base);
    let modified_strengths = fixture
        .scenario
        .modified
        .as_ref()
        .map(|g| fixture.semantics.evaluate(g));
    for expected in &fixture.expected_strengths {
        let strengths = match expected.graph {
            WhichGraph::Base => &base_strengths,
            WhichGraph::Modified => match &modified_strengths {
                Some(m) => m,
                None => {
                    strength_issues.push(format!("{}: no modified graph", expected.id));
                    continue;
                }
            },
        };
        match strengths {
            Ok(map) => {
                let actual_value = map[&sid(expected.id)];
                if (actual_value - expected.value).abs() > expected.tolerance {
                    strength_issues.push(format!(
                        "{}: expected {} +/- {}, got {}",
                        expected.id, expected.value, expected.tolerance, actual_value
                    ));
                }
            }
            Err(e) => strength_issues.push(format!("evaluation failed: {e}")),
        }
    }

    let pass = actual == fixture.expected && strength_issues.is_empty();
    FixtureOutcome {
        name: fixture.name,
        expected: fixture.expected,
        actual,
        strength_issues,
        pass,
    }
}
