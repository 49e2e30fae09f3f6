//! Seeded random statement graphs for fuzzing and randomised checks.
//!
//! Atoms are ranked and premises only draw atoms ranked below the claim's,
//! so derived edges always point rank-upwards and the result is acyclic by
//! construction. A configurable share of premise literals draws from a
//! separate orphan pool that no statement ever claims, producing statements
//! of varying completeness.

use rand::{Rng, RngExt};

use crate::model::{Literal, Statement, StatementGraph, StatementId};

#[derive(Clone, Debug)]
pub struct GraphConfig {
    pub max_statements: usize,
    pub max_premise_size: usize,
    /// Number of claimable atoms.
    pub atom_pool: usize,
    /// Probability that a premise literal draws an orphan atom instead of a
    /// claimable one.
    pub orphan_share: f64,
    /// Probability that a weight is drawn uniformly instead of from the
    /// 0.1 grid. Several properties only trigger at grid extremes.
    pub continuous_weight_share: f64,
}

impl Default for GraphConfig {
    fn default() -> Self {
        GraphConfig {
            max_statements: 8,
            max_premise_size: 3,
            atom_pool: 8,
            orphan_share: 0.25,
            continuous_weight_share: 0.5,
        }
    }
}

const ORPHAN_POOL: usize = 4;

pub fn random_weight<R: Rng>(rng: &mut R, config: &GraphConfig) -> f64 {
    if rng.random_bool(config.continuous_weight_share) {
        rng.random::<f64>()
    } else {
        rng.random_range(0..=10) as f64 / 10.0
    }
}

fn ranked_atom(rank: usize) -> String {
    format!("a{rank}")
}

fn orphan_atom(index: usize) -> String {
    format!("u{index}")
}

/// A random acyclic statement graph with ids `s0..`, claimable atoms
/// `a0..` and orphan atoms `u0..`.
pub fn random_graph<R: Rng>(rng: &mut R, config: &GraphConfig) -> StatementGraph {
    let count = rng.random_range(1..=config.max_statements.max(1));
    let mut statements: Vec<Statement> = Vec::with_capacity(count);
    let mut weights = Vec::with_capacity(count);
    let mut keys: Vec<(String, String)> = Vec::new();

    for index in 0..count {
        let id = format!("s{index}");
        for _ in 0..20 {
            let claim_rank = rng.random_range(0..config.atom_pool);
            let claim = Literal::new(&ranked_atom(claim_rank), rng.random_bool(0.3))
                .expect("generated atoms are valid");
            let fact = rng.random_bool(0.35) || (claim_rank == 0 && rng.random_bool(0.5));
            let premise_literals: Vec<Literal> = if fact {
                vec![Literal::top()]
            } else {
                let size = rng.random_range(1..=config.max_premise_size.max(1));
                let mut chosen: Vec<Literal> = Vec::new();
                for _ in 0..size {
                    let orphan = claim_rank == 0 || rng.random_bool(config.orphan_share);
                    let atom = if orphan {
                        orphan_atom(rng.random_range(0..ORPHAN_POOL))
                    } else {
                        ranked_atom(rng.random_range(0..claim_rank))
                    };
                    if chosen.iter().any(|l| l.atom() == atom) {
                        continue;
                    }
                    chosen.push(
                        Literal::new(&atom, rng.random_bool(0.3))
                            .expect("generated atoms are valid"),
                    );
                }
                if chosen.is_empty() {
                    vec![Literal::top()]
                } else {
                    chosen
                }
            };
            let statement = Statement::make(&id, &premise_literals, claim.clone())
                .expect("generated statements are well formed");
            let key = (statement.premise().to_string(), claim.to_string());
            if keys.contains(&key) {
                continue;
            }
            keys.push(key);
            statements.push(statement);
            weights.push((
                StatementId::new(&id).expect("generated ids are valid"),
                random_weight(rng, config),
            ));
            break;
        }
    }

    StatementGraph::build(statements, weights).expect("ranked construction is acyclic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_graphs_are_valid_and_deterministic() {
        let config = GraphConfig::default();
        for seed in 0..200 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(&mut rng, &config);
            assert!(!g.is_empty());
            assert!(g.len() <= config.max_statements);
            assert!(g.attacks().intersection(g.supports()).next().is_none());

            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let again = random_graph(&mut rng, &config);
            assert_eq!(g, again);
        }
    }

    #[test]
    fn single_literal_config_caps_premises() {
        let config = GraphConfig {
            max_premise_size: 1,
            ..GraphConfig::default()
        };
        for seed in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(&mut rng, &config);
            for st in g.statements() {
                assert!(st.premise().len() <= 1);
            }
        }
    }
}
