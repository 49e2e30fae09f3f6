//! Randomised falsification and the satisfaction matrix.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::random::GraphConfig;
use crate::semantics::Semantics;

use super::check::{check_property_detailed, minimize_witness};
use super::fixtures::fixture_suite;
use super::generate::random_scenario;
use super::{PropertyError, PropertyId, VerdictStatus, Witness};

/// Deterministic per-trial seed derivation, independent of scheduling.
fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub property: PropertyId,
    pub semantics: Semantics,
    pub applicable: bool,
    pub trials: u64,
    /// Trials whose semantic antecedent held, so the consequent was really
    /// exercised.
    pub effective_trials: u64,
    pub vacuous_trials: u64,
    pub unrealizable_trials: u64,
    pub violations: u64,
    pub first_violation_trial: Option<u64>,
    pub first_witness: Option<Witness>,
    pub elapsed: Duration,
}

impl FuzzReport {
    pub fn render_text(&self) -> String {
        if !self.applicable {
            return format!(
                "{} is not applicable to {}\n",
                self.property, self.semantics
            );
        }
        let mut out = format!(
            "{} under {}: {} violations in {} trials ({} effective, {} vacuous, {} unrealizable) in {:.2?}\n",
            self.property,
            self.semantics,
            self.violations,
            self.trials,
            self.effective_trials,
            self.vacuous_trials,
            self.unrealizable_trials,
            self.elapsed,
        );
        if let Some(witness) = &self.first_witness {
            out.push_str(&format!(
                "first witness (trial {}): {}\n",
                self.first_violation_trial.unwrap_or(0),
                witness.clause
            ));
            out.push_str(&format!(
                "  graph: {}",
                crate::parse::serialize_sg(&witness.scenario.base).replace('\n', "; ")
            ));
            out.push('\n');
            if let Some(modified) = &witness.scenario.modified {
                out.push_str(&format!(
                    "  modified: {}",
                    crate::parse::serialize_sg(modified).replace('\n', "; ")
                ));
                out.push('\n');
            }
        }
        out
    }
}

/// Runs `trials` random scenarios of the property against the semantics.
/// A clean run means "no counterexample found", never a proof.
pub fn fuzz(
    property: PropertyId,
    semantics: Semantics,
    trials: u64,
    config: &GraphConfig,
    seed: u64,
    tolerance: f64,
) -> Result<FuzzReport, PropertyError> {
    let started = Instant::now();
    let mut report = FuzzReport {
        property,
        semantics,
        applicable: property.applicable_to(semantics),
        trials: 0,
        effective_trials: 0,
        vacuous_trials: 0,
        unrealizable_trials: 0,
        violations: 0,
        first_violation_trial: None,
        first_witness: None,
        elapsed: Duration::ZERO,
    };
    if !report.applicable {
        report.elapsed = started.elapsed();
        return Ok(report);
    }
    for index in 0..trials {
        report.trials += 1;
        let scenario = match random_scenario(property, config, trial_seed(seed, index)) {
            Ok(s) => s,
            Err(PropertyError::Unrealizable { .. }) => {
                report.unrealizable_trials += 1;
                continue;
            }
            Err(other) => return Err(other),
        };
        let outcome = check_property_detailed(property, semantics, &scenario, tolerance)?;
        if outcome.antecedent_met {
            report.effective_trials += 1;
        } else {
            report.vacuous_trials += 1;
        }
        if outcome.verdict.status == VerdictStatus::Violated {
            report.violations += 1;
            if report.first_witness.is_none() {
                report.first_violation_trial = Some(index);
                let minimized = minimize_witness(property, semantics, &scenario, tolerance);
                let witness = check_property_detailed(property, semantics, &minimized, tolerance)?
                    .verdict
                    .witness
                    .or(outcome.verdict.witness);
                report.first_witness = witness;
            }
        }
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// One cell of the satisfaction matrix, with its evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CellStatus {
    NotApplicable,
    ViolatedByFixture { fixture: String },
    ViolatedByFuzz { trial: u64 },
    NoCounterexampleFound { trials: u64 },
}

impl CellStatus {
    pub fn symbol(&self) -> &'static str {
        match self {
            CellStatus::NotApplicable => "-",
            CellStatus::ViolatedByFixture { .. } | CellStatus::ViolatedByFuzz { .. } => "x",
            CellStatus::NoCounterexampleFound { .. } => "ok",
        }
    }

    pub fn is_violated(&self) -> bool {
        matches!(
            self,
            CellStatus::ViolatedByFixture { .. } | CellStatus::ViolatedByFuzz { .. }
        )
    }
}

#[derive(Clone, Debug)]
pub struct MatrixCell {
    pub property: PropertyId,
    pub status: CellStatus,
}

#[derive(Clone, Debug)]
pub struct MatrixRow {
    pub semantics: Semantics,
    pub cells: Vec<MatrixCell>,
}

#[derive(Clone, Debug)]
pub struct MatrixReport {
    pub properties: Vec<PropertyId>,
    pub rows: Vec<MatrixRow>,
    pub trials: u64,
    pub seed: u64,
}

impl MatrixReport {
    pub fn cell(&self, semantics: Semantics, property: PropertyId) -> Option<&CellStatus> {
        self.rows
            .iter()
            .find(|row| row.semantics == semantics)
            .and_then(|row| {
                row.cells
                    .iter()
                    .find(|cell| cell.property == property)
                    .map(|cell| &cell.status)
            })
    }

    /// Plain grid: properties as lines, semantics as columns.
    pub fn render_text(&self) -> String {
        let width = self
            .properties
            .iter()
            .map(|p| p.name().len())
            .max()
            .unwrap_or(8)
            + 2;
        let mut out = format!("{:width$}", "property");
        for row in &self.rows {
            out.push_str(&format!("{:>10}", row.semantics.name()));
        }
        out.push('\n');
        for (i, property) in self.properties.iter().enumerate() {
            out.push_str(&format!("{:width$}", property.name()));
            for row in &self.rows {
                out.push_str(&format!("{:>10}", row.cells[i].status.symbol()));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct CellJson<'a> {
            property: &'a str,
            status: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            evidence: Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            trials: Option<u64>,
        }
        #[derive(Serialize)]
        struct RowJson<'a> {
            semantics: &'a str,
            cells: Vec<CellJson<'a>>,
        }
        #[derive(Serialize)]
        struct ReportJson<'a> {
            trials: u64,
            seed: u64,
            rows: Vec<RowJson<'a>>,
        }
        let rows = self
            .rows
            .iter()
            .map(|row| RowJson {
                semantics: row.semantics.name(),
                cells: row
                    .cells
                    .iter()
                    .map(|cell| match &cell.status {
                        CellStatus::NotApplicable => CellJson {
                            property: cell.property.name(),
                            status: "not-applicable",
                            evidence: None,
                            trials: None,
                        },
                        CellStatus::ViolatedByFixture { fixture } => CellJson {
                            property: cell.property.name(),
                            status: "violated-by-fixture",
                            evidence: Some(fixture.clone()),
                            trials: None,
                        },
                        CellStatus::ViolatedByFuzz { trial } => CellJson {
                            property: cell.property.name(),
                            status: "violated-by-fuzz",
                            evidence: Some(format!("trial {trial}")),
                            trials: None,
                        },
                        CellStatus::NoCounterexampleFound { trials } => CellJson {
                            property: cell.property.name(),
                            status: "no-counterexample-found",
                            evidence: None,
                            trials: Some(*trials),
                        },
                    })
                    .collect(),
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&ReportJson {
            trials: self.trials,
            seed: self.seed,
            rows,
        })
        .expect("serializable report");
        text.push('\n');
        text
    }
}

/// Fills the matrix: incompatible pairs are marked, violated fixtures are
/// cited, and remaining cells are fuzzed.
pub fn satisfaction_matrix(
    semantics: &[Semantics],
    properties: &[PropertyId],
    trials: u64,
    config: &GraphConfig,
    seed: u64,
    tolerance: f64,
) -> Result<MatrixReport, PropertyError> {
    let fixtures = fixture_suite();
    let mut rows = Vec::new();
    for &sem in semantics {
        let mut cells = Vec::new();
        for &property in properties {
            let status = if !property.applicable_to(sem) {
                CellStatus::NotApplicable
            } else {
                let fixture_hit = fixtures
                    .iter()
                    .filter(|f| f.property == property && f.semantics == sem)
                    .find_map(|f| {
                        match super::check::check_property(property, sem, &f.scenario, tolerance) {
                            Ok(verdict) if verdict.status == VerdictStatus::Violated => {
                                Some(f.name.to_string())
                            }
                            _ => None,
                        }
                    });
                match fixture_hit {
                    Some(fixture) => CellStatus::ViolatedByFixture { fixture },
                    None => {
                        let report = fuzz(property, sem, trials, config, seed, tolerance)?;
                        if report.violations > 0 {
                            CellStatus::ViolatedByFuzz {
                                trial: report.first_violation_trial.unwrap_or(0),
                            }
                        } else {
                            CellStatus::NoCounterexampleFound {
                                trials: report.trials,
                            }
                        }
                    }
                }
            };
            cells.push(MatrixCell { property, status });
        }
        rows.push(MatrixRow {
            semantics: sem,
            cells,
        });
    }
    Ok(MatrixReport {
        properties: properties.to_vec(),
        rows,
        trials,
        seed,
    })
}
