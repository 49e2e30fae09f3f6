//! Executable encodings of seventeen formal properties of gradual strength
//! semantics, counterexample fixtures, a randomised scenario generator and
//! the satisfaction matrix tying them together.
//!
//! Properties are universally quantified; this lab checks instances. A
//! `Violated` verdict is definitive, `Holds` speaks for one scenario only,
//! and a clean fuzzing run is "no counterexample found", never a proof.

mod check;
mod fixtures;
mod fuzz;
mod generate;

pub use check::{check_property, validate_scenario};
pub use fixtures::{
    fixture_suite, run_fixture, ExpectedStrength, Fixture, FixtureOutcome, WhichGraph,
};
pub use fuzz::{
    fuzz, satisfaction_matrix, CellStatus, FuzzReport, MatrixCell, MatrixReport, MatrixRow,
};
pub use generate::random_scenario;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::model::{ModelError, StatementGraph, StatementId};
use crate::semantics::{EvalError, Semantics};

/// The checked properties, in presentation order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum PropertyId {
    Directionality,
    Rewriting,
    Provability,
    WeakProvability,
    Stability,
    Neutrality,
    AttackedPremise,
    SupportedPremise,
    WeakenedPremise,
    StrengthenedPremise,
    BottomStrengthPremise,
    TopStrengthPremises,
    Mirroring,
    AttackReinforcement,
    SupportReinforcement,
    AttackMonotonicity,
    SupportMonotonicity,
}

impl PropertyId {
    pub const ALL: [PropertyId; 17] = [
        PropertyId::Directionality,
        PropertyId::Rewriting,
        PropertyId::Provability,
        PropertyId::WeakProvability,
        PropertyId::Stability,
        PropertyId::Neutrality,
        PropertyId::AttackedPremise,
        PropertyId::SupportedPremise,
        PropertyId::WeakenedPremise,
        PropertyId::StrengthenedPremise,
        PropertyId::BottomStrengthPremise,
        PropertyId::TopStrengthPremises,
        PropertyId::Mirroring,
        PropertyId::AttackReinforcement,
        PropertyId::SupportReinforcement,
        PropertyId::AttackMonotonicity,
        PropertyId::SupportMonotonicity,
    ];

    /// The thirteen core properties, without the support-tree quartet.
    pub const CORE: [PropertyId; 13] = [
        PropertyId::Directionality,
        PropertyId::Rewriting,
        PropertyId::Provability,
        PropertyId::WeakProvability,
        PropertyId::Stability,
        PropertyId::Neutrality,
        PropertyId::AttackedPremise,
        PropertyId::SupportedPremise,
        PropertyId::WeakenedPremise,
        PropertyId::StrengthenedPremise,
        PropertyId::BottomStrengthPremise,
        PropertyId::TopStrengthPremises,
        PropertyId::Mirroring,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::Directionality => "directionality",
            PropertyId::Rewriting => "rewriting",
            PropertyId::Provability => "provability",
            PropertyId::WeakProvability => "weak-provability",
            PropertyId::Stability => "stability",
            PropertyId::Neutrality => "neutrality",
            PropertyId::AttackedPremise => "attacked-premise",
            PropertyId::SupportedPremise => "supported-premise",
            PropertyId::WeakenedPremise => "weakened-premise",
            PropertyId::StrengthenedPremise => "strengthened-premise",
            PropertyId::BottomStrengthPremise => "bottom-strength-premise",
            PropertyId::TopStrengthPremises => "top-strength-premises",
            PropertyId::Mirroring => "mirroring",
            PropertyId::AttackReinforcement => "attack-reinforcement",
            PropertyId::SupportReinforcement => "support-reinforcement",
            PropertyId::AttackMonotonicity => "attack-monotonicity",
            PropertyId::SupportMonotonicity => "support-monotonicity",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        PropertyId::ALL.into_iter().find(|p| p.name() == name)
    }

    /// Properties that inspect premises or support trees make no sense for
    /// abstract semantics.
    pub fn structured_only(self) -> bool {
        matches!(
            self,
            PropertyId::Rewriting
                | PropertyId::Provability
                | PropertyId::WeakProvability
                | PropertyId::BottomStrengthPremise
                | PropertyId::TopStrengthPremises
                | PropertyId::Mirroring
                | PropertyId::AttackReinforcement
                | PropertyId::SupportReinforcement
                | PropertyId::AttackMonotonicity
                | PropertyId::SupportMonotonicity
        )
    }

    pub fn applicable_to(self, semantics: Semantics) -> bool {
        !self.structured_only() || semantics.is_structured()
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a scenario's modified graph differs from its base graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChangeDescriptor {
    AddedStatement(StatementId),
    Reweighted(Vec<StatementId>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScenarioKind {
    SingleGraph,
    GraphPair,
}

/// One instance of a property's quantified variables: a graph (or a pair),
/// statements bound to the property's roles, and the transformation that
/// produced the modified graph.
#[derive(Clone, PartialEq, Debug)]
pub struct Scenario {
    pub property: PropertyId,
    pub base: StatementGraph,
    pub modified: Option<StatementGraph>,
    pub roles: BTreeMap<String, StatementId>,
    pub change: Option<ChangeDescriptor>,
}

impl Scenario {
    pub fn kind(&self) -> ScenarioKind {
        if self.modified.is_some() {
            ScenarioKind::GraphPair
        } else {
            ScenarioKind::SingleGraph
        }
    }

    pub fn role(&self, name: &str) -> Result<&StatementId, PropertyError> {
        self.roles.get(name).ok_or_else(|| {
            PropertyError::MalformedScenario(format!(
                "scenario for {} is missing the '{name}' role",
                self.property
            ))
        })
    }
}

/// Outcome of checking one property instance for one semantics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictStatus {
    Holds,
    Violated,
    NotApplicable,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VerdictStatus::Holds => "holds",
            VerdictStatus::Violated => "violated",
            VerdictStatus::NotApplicable => "not-applicable",
        };
        f.write_str(name)
    }
}

/// Everything needed to re-run a violated check: the scenario itself, the
/// strengths that contradict the property, and the violated clause.
#[derive(Clone, Debug)]
pub struct Witness {
    pub scenario: Scenario,
    pub strengths: BTreeMap<String, f64>,
    pub clause: String,
}

#[derive(Clone, Debug)]
pub struct PropertyVerdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    fn holds() -> Self {
        PropertyVerdict {
            status: VerdictStatus::Holds,
            witness: None,
        }
    }

    fn not_applicable() -> Self {
        PropertyVerdict {
            status: VerdictStatus::NotApplicable,
            witness: None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PropertyError {
    #[error("malformed scenario: {0}")]
    MalformedScenario(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("could not instantiate {property} within the configured bounds")]
    Unrealizable { property: PropertyId },
}
