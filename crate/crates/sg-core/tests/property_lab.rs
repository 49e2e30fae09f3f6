//! Integration checks for the property lab: fixtures, generated scenario
//! validity, fuzzing behaviour and witness minimization.

use sg_core::properties::{
    check_property, fixture_suite, fuzz, random_scenario, run_fixture, satisfaction_matrix,
    validate_scenario, PropertyId,
};
use sg_core::random::GraphConfig;
use sg_core::Semantics;

#[test]
fn every_fixture_passes() {
    let mut failures = Vec::new();
    for fixture in fixture_suite() {
        let outcome = run_fixture(&fixture);
        if !outcome.pass {
            failures.push(format!(
                "{}: expected {}, got {}; {:?}",
                outcome.name, outcome.expected, outcome.actual, outcome.strength_issues
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "failing fixtures:\n{}",
        failures.join("\n")
    );
}

#[test]
fn fixture_names_are_unique() {
    let mut names: Vec<&str> = fixture_suite().iter().map(|f| f.name).collect();
    let total = names.len();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), total);
}

#[test]
fn generated_scenarios_validate_for_every_property() {
    let config = GraphConfig::default();
    for property in PropertyId::ALL {
        let mut produced = 0;
        for seed in 0..40u64 {
            match random_scenario(property, &config, seed) {
                Ok(scenario) => {
                    produced += 1;
                    validate_scenario(&scenario)
                        .unwrap_or_else(|e| panic!("{property} seed {seed}: {e}"));
                    assert_eq!(scenario.property, property);
                }
                Err(e) => panic!("{property} seed {seed} unrealizable: {e}"),
            }
        }
        assert!(produced > 0, "{property} produced nothing");
    }
}

#[test]
fn generation_is_deterministic() {
    let config = GraphConfig::default();
    for property in [
        PropertyId::Neutrality,
        PropertyId::Mirroring,
        PropertyId::Rewriting,
    ] {
        let a = random_scenario(property, &config, 7).unwrap();
        let b = random_scenario(property, &config, 7).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn incompatible_pairs_are_not_applicable() {
    let config = GraphConfig::default();
    let scenario = random_scenario(PropertyId::Mirroring, &config, 3).unwrap();
    let verdict =
        check_property(PropertyId::Mirroring, Semantics::Dfquad, &scenario, 1e-9).unwrap();
    assert_eq!(
        verdict.status,
        sg_core::properties::VerdictStatus::NotApplicable
    );
}

#[test]
fn stability_fuzz_finds_a_tiny_witness_for_tnorm_p() {
    let config = GraphConfig::default();
    let report = fuzz(
        PropertyId::Stability,
        Semantics::TnormP,
        10,
        &config,
        42,
        1e-9,
    )
    .unwrap();
    assert!(report.violations >= 1);
    let witness = report.first_witness.expect("violation carries a witness");
    assert_eq!(witness.scenario.base.len(), 1);
}

#[test]
fn stability_fuzz_is_clean_for_dc_dfquad() {
    let config = GraphConfig::default();
    let report = fuzz(
        PropertyId::Stability,
        Semantics::DcDfquad,
        300,
        &config,
        42,
        1e-9,
    )
    .unwrap();
    assert_eq!(report.violations, 0);
    assert!(report.effective_trials > 0);
}

#[test]
fn bottom_strength_fuzz_breaks_dc_qem() {
    let config = GraphConfig::default();
    let report = fuzz(
        PropertyId::BottomStrengthPremise,
        Semantics::DcQem,
        50,
        &config,
        1,
        1e-9,
    )
    .unwrap();
    assert!(report.violations >= 1);
}

#[test]
fn empty_inputs_give_an_empty_matrix() {
    let report = satisfaction_matrix(&[], &[], 5, &GraphConfig::default(), 42, 1e-9).unwrap();
    assert!(report.rows.is_empty());
    assert!(report.properties.is_empty());
}
