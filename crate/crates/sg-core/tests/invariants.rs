//! Cross-cutting invariants: round-trips, canonicalisation, range safety,
//! monotone responses and the single-literal collapse.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sg_core::bipolar::{apply_abstract_to_sg, qem_combine, DfQuad, Qem};
use sg_core::modular::eval_dc;
use sg_core::parse::{parse_sg, serialize_sg};
use sg_core::random::{random_graph, GraphConfig};
use sg_core::{Literal, Premise, Semantics};

proptest! {
    #[test]
    fn parse_serialize_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &GraphConfig::default());
        let text = serialize_sg(&g);
        let reparsed = parse_sg(&text).expect("canonical text parses");
        prop_assert_eq!(&reparsed, &g);
        prop_assert_eq!(serialize_sg(&reparsed), text);
    }

    #[test]
    fn premises_are_canonical_under_permutation(
        atoms in proptest::collection::vec("[a-f]", 1..5),
        polarity in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let literals: Vec<Literal> = atoms
            .iter()
            .zip(polarity.iter())
            .map(|(a, n)| Literal::new(a, *n).unwrap())
            .collect();
        let forward = Premise::conjunction(literals.clone());
        let backward = Premise::conjunction(literals.into_iter().rev());
        match (forward, backward) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            other => prop_assert!(false, "asymmetric outcome: {:?}", other),
        }
    }

    #[test]
    fn weights_print_in_shortest_round_trip_form(w in 0.0f64..=1.0) {
        let g = parse_sg(&format!("s: T => a @ {w}")).expect("valid weight");
        let text = serialize_sg(&g);
        let marker = format!("@ {w}");
        prop_assert!(text.contains(&marker));
    }
}

#[test]
fn all_semantics_stay_in_range_on_random_graphs() {
    let config = GraphConfig::default();
    for seed in 0..2_000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        for semantics in Semantics::ALL {
            let strengths = semantics.evaluate(&g).unwrap();
            for (id, v) in &strengths {
                assert!(
                    (0.0..=1.0).contains(v),
                    "{semantics} gave {v} to {id} at seed {seed}"
                );
            }
        }
    }
}

#[test]
fn qem_responds_monotonically_to_single_score_changes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    use rand::RngExt;
    for _ in 0..2_000 {
        let base: f64 = rng.random();
        let mut attackers: Vec<f64> = (0..rng.random_range(0..4)).map(|_| rng.random()).collect();
        let mut supporters: Vec<f64> = (0..rng.random_range(1..4)).map(|_| rng.random()).collect();
        let before = qem_combine(base, &attackers, &supporters);

        let bump = rng.random_range(0.0..(1.0 - supporters[0]).max(1e-9));
        supporters[0] = (supporters[0] + bump).min(1.0);
        let after = qem_combine(base, &attackers, &supporters);
        assert!(after >= before - 1e-12);

        if !attackers.is_empty() {
            let before = after;
            attackers[0] = (attackers[0] + rng.random_range(0.0..1.0)).min(1.0);
            let after = qem_combine(base, &attackers, &supporters);
            assert!(after <= before + 1e-12);
        }
    }
}

#[test]
fn single_literal_graphs_collapse_to_the_abstract_semantics() {
    let config = GraphConfig {
        max_premise_size: 1,
        ..GraphConfig::default()
    };
    for seed in 0..300u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        let dc = eval_dc(&g, &DfQuad);
        let flat = apply_abstract_to_sg(&g, &DfQuad);
        for id in g.ids() {
            assert!((dc[id] - flat[id]).abs() <= 1e-9, "seed {seed}, {id}");
        }
        let dc = eval_dc(&g, &Qem);
        let flat = apply_abstract_to_sg(&g, &Qem);
        for id in g.ids() {
            assert!((dc[id] - flat[id]).abs() <= 1e-9, "seed {seed}, {id}");
        }
    }
}

#[test]
fn evaluation_is_deterministic_across_repeats() {
    let config = GraphConfig::default();
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        for semantics in Semantics::ALL {
            let a = semantics.evaluate(&g).unwrap();
            let b = semantics.evaluate(&g).unwrap();
            let bits = |m: &BTreeMap<sg_core::StatementId, f64>| -> Vec<u64> {
                m.values().map(|v| v.to_bits()).collect()
            };
            assert_eq!(bits(&a), bits(&b));
        }
    }
}

#[test]
fn abstract_semantics_stay_in_range_at_scale() {
    let config = GraphConfig::default();
    for seed in 0..100_000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, &config);
        for scores in [
            apply_abstract_to_sg(&g, &DfQuad),
            apply_abstract_to_sg(&g, &Qem),
        ] {
            for (id, v) in &scores {
                assert!((0.0..=1.0).contains(v), "{id} scored {v} at seed {seed}");
            }
        }
    }
}

#[test]
fn core_types_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<sg_core::StatementGraph>();
    assert_send_sync::<sg_core::DeMorganTriple>();
    assert_send_sync::<sg_core::modular::PremiseAggregator>();
    assert_send_sync::<sg_core::properties::Scenario>();
}

#[test]
fn json_export_is_byte_stable() {
    let config = GraphConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_graph(&mut rng, &config);
    let strengths = Semantics::DcDfquad.evaluate(&g).unwrap();
    let a = sg_core::export::export_json(&g, Some(&strengths)).unwrap();
    let b = sg_core::export::export_json(&g, Some(&strengths)).unwrap();
    assert_eq!(a, b);
}
