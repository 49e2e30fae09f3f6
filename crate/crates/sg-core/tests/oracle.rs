//! Cross-checks of the production enumeration and evaluation paths against
//! the exhaustive oracles.

#[path = "common/oracle.rs"]
mod oracle;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sg_core::cst::{enumerate_csts, eval_tnorm, DeMorganTriple};
use sg_core::model::derive_relations;
use sg_core::parse::parse_sg;
use sg_core::random::{random_graph, GraphConfig};
use sg_core::{Statement, StatementId};

fn ten_statement_config() -> GraphConfig {
    GraphConfig {
        max_statements: 10,
        ..GraphConfig::default()
    }
}

#[test]
fn derived_relations_match_the_pairwise_oracle() {
    let config = ten_statement_config();
    for seed in 0..300u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        let statements: Vec<&Statement> = g.statements().collect();
        let (attacks, supports) = oracle::oracle_relations(&statements);
        assert_eq!(g.attacks(), &attacks, "seed {seed}");
        assert_eq!(g.supports(), &supports, "seed {seed}");
        let owned: Vec<Statement> = statements.into_iter().cloned().collect();
        let (direct_attacks, direct_supports) = derive_relations(&owned);
        assert_eq!(direct_attacks, attacks);
        assert_eq!(direct_supports, supports);
    }
}

#[test]
fn enumeration_matches_the_subset_oracle() {
    let config = ten_statement_config();
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        for id in g.ids() {
            let enumerated: BTreeSet<BTreeSet<StatementId>> = enumerate_csts(&g, id)
                .unwrap()
                .into_iter()
                .map(|t| t.members().clone())
                .collect();
            let expected = oracle::oracle_csts(&g, id);
            assert_eq!(enumerated, expected, "seed {seed}, root {id}");
        }
    }
}

#[test]
fn tnorm_evaluation_matches_the_definition() {
    let config = ten_statement_config();
    let product_triple = DeMorganTriple::product();
    let minimum_triple = DeMorganTriple::minimum();
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        let fast_p = eval_tnorm(&g, &product_triple).unwrap();
        let slow_p = oracle::oracle_tnorm(
            &g,
            oracle::product,
            oracle::probabilistic_sum,
            oracle::standard_negation,
        );
        let fast_m = eval_tnorm(&g, &minimum_triple).unwrap();
        let slow_m = oracle::oracle_tnorm(
            &g,
            oracle::minimum,
            oracle::maximum,
            oracle::standard_negation,
        );
        for id in g.ids() {
            assert!(
                (fast_p[id] - slow_p[id]).abs() < 1e-12,
                "seed {seed}, {id}: {} vs {}",
                fast_p[id],
                slow_p[id]
            );
            assert!(
                (fast_m[id] - slow_m[id]).abs() < 1e-12,
                "seed {seed}, {id}: {} vs {}",
                fast_m[id],
                slow_m[id]
            );
        }
    }
}

#[test]
fn mirror_graph_strengths_match_the_oracle() {
    let g = parse_sg(
        "a1: a => b @ 0.5\na2: T => a @ 0.5\na3: ~a => c @ 0.5\na4: d => ~a @ 0.5\na5: T => d @ 0.5",
    )
    .unwrap();
    let sid = |s: &str| StatementId::new(s).unwrap();
    let slow = oracle::oracle_tnorm(
        &g,
        oracle::minimum,
        oracle::maximum,
        oracle::standard_negation,
    );
    // All inputs sit at one half, and min, max and standard negation cannot
    // leave {0, 0.5, 1}; both focal statements land exactly on 0.5.
    assert_eq!(slow[&sid("a1")], 0.5);
    assert_eq!(slow[&sid("a3")], 0.5);
    let slow_p = oracle::oracle_tnorm(
        &g,
        oracle::product,
        oracle::probabilistic_sum,
        oracle::standard_negation,
    );
    assert_eq!(slow_p[&sid("a1")], 0.1875);
    assert_eq!(slow_p[&sid("a3")], 0.0625);
}
