//! `sg` — evaluate, classify, property-check and export statement graphs.
//!
//! Exit codes: 0 success; 1 parse error or failing fixtures; 2 structural
//! error (cycles, resource limits) or command-line usage error; 3 unknown
//! semantics or property name. Diagnostics go to standard error only.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use sg_core::cst::classify_completeness;
use sg_core::export::{export_dot, export_json};
use sg_core::parse::{parse_sg, serialize_sg, ParseError, ParseErrorKind};
use sg_core::properties::{fixture_suite, fuzz, run_fixture, satisfaction_matrix, PropertyId};
use sg_core::random::GraphConfig;
use sg_core::semantics::EvalError;
use sg_core::{Semantics, StatementGraph};

#[derive(Parser)]
#[command(
    name = "sg",
    version,
    about = "Gradual strength semantics for statement graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statement strengths under a semantics.
    Eval {
        /// One of: tnorm-p, tnorm-m, dc-dfquad, dc-qem, dfquad, qem.
        #[arg(long)]
        semantics: String,
        /// Output format: text, json or dot.
        #[arg(long, default_value = "text")]
        format: String,
        /// Input file; standard input when omitted or "-".
        input: Option<PathBuf>,
    },
    /// Classify each statement as complete, partially-complete or
    /// incomplete.
    Classify { input: Option<PathBuf> },
    /// Run the pinned property fixtures.
    Props {
        /// Run the fixture suite (the default and only mode).
        #[arg(long, default_value_t = true)]
        fixtures: bool,
    },
    /// Search for property violations over random scenarios.
    Fuzz {
        #[arg(long)]
        property: String,
        #[arg(long)]
        semantics: String,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check every property against every semantics and render the
    /// satisfaction matrix.
    Matrix {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Export a graph as canonical text, JSON or DOT, optionally annotated
    /// with strengths.
    Export {
        #[arg(long, default_value = "dot")]
        format: String,
        /// Annotate nodes with strengths from this semantics.
        #[arg(long)]
        semantics: Option<String>,
        input: Option<PathBuf>,
    },
}

enum Failure {
    Parse(Vec<ParseError>),
    Structural(String),
    UnknownName(String),
    Io(String),
    FixturesFailed(usize),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) | Failure::Io(_) | Failure::FixturesFailed(_) => 1,
            Failure::Structural(_) => 2,
            Failure::UnknownName(_) => 3,
        }
    }

    fn report(&self) {
        match self {
            Failure::Parse(errors) => {
                for e in errors {
                    eprintln!("error: {e}");
                }
            }
            Failure::Structural(msg) => eprintln!("error: {msg}"),
            Failure::UnknownName(msg) => eprintln!("error: {msg}"),
            Failure::Io(msg) => eprintln!("error: {msg}"),
            Failure::FixturesFailed(count) => eprintln!("error: {count} fixtures failed"),
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(e.to_string()))?;
            Ok(text)
        }
    }
}

fn load_graph(path: &Option<PathBuf>) -> Result<StatementGraph, Failure> {
    let text = read_input(path)?;
    parse_sg(&text).map_err(|errors| {
        // A cycle is a structural defect of a syntactically fine file.
        if errors.iter().any(|e| e.kind == ParseErrorKind::CyclicGraph) {
            let listed = errors
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            Failure::Structural(listed)
        } else {
            Failure::Parse(errors)
        }
    })
}

fn parse_semantics(name: &str) -> Result<Semantics, Failure> {
    Semantics::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = Semantics::ALL.iter().map(|s| s.name()).collect();
        Failure::UnknownName(format!(
            "unknown semantics '{name}'; expected one of {}",
            known.join(", ")
        ))
    })
}

fn parse_property(name: &str) -> Result<PropertyId, Failure> {
    PropertyId::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = PropertyId::ALL.iter().map(|p| p.name()).collect();
        Failure::UnknownName(format!(
            "unknown property '{name}'; expected one of {}",
            known.join(", ")
        ))
    })
}

fn evaluate(
    semantics: Semantics,
    graph: &StatementGraph,
) -> Result<std::collections::BTreeMap<sg_core::StatementId, f64>, Failure> {
    semantics.evaluate(graph).map_err(|e| match e {
        EvalError::Cst(inner) => Failure::Structural(inner.to_string()),
    })
}

fn cmd_eval(semantics: &str, format: &str, input: &Option<PathBuf>) -> Result<(), Failure> {
    let semantics = parse_semantics(semantics)?;
    let graph = load_graph(input)?;
    let strengths = evaluate(semantics, &graph)?;
    match format {
        "text" => {
            for (id, strength) in &strengths {
                println!("{id} {strength}");
            }
        }
        "json" => print!(
            "{}",
            export_json(&graph, Some(&strengths)).expect("strengths cover the graph")
        ),
        "dot" => print!(
            "{}",
            export_dot(&graph, Some(&strengths)).expect("strengths cover the graph")
        ),
        other => return Err(Failure::UnknownName(format!("unknown format '{other}'"))),
    }
    Ok(())
}

fn cmd_classify(input: &Option<PathBuf>) -> Result<(), Failure> {
    let graph = load_graph(input)?;
    for id in graph.ids() {
        let verdict =
            classify_completeness(&graph, id).map_err(|e| Failure::Structural(e.to_string()))?;
        println!("{id} {verdict}");
    }
    Ok(())
}

fn cmd_props() -> Result<(), Failure> {
    let mut failed = 0;
    for fixture in fixture_suite() {
        let outcome = run_fixture(&fixture);
        let status = if outcome.pass { "pass" } else { "FAIL" };
        println!(
            "{} [{}/{}] expected={} actual={} {status}",
            outcome.name, fixture.semantics, fixture.property, outcome.expected, outcome.actual,
        );
        for issue in &outcome.strength_issues {
            println!("    {issue}");
        }
        if !outcome.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(Failure::FixturesFailed(failed));
    }
    Ok(())
}

#[derive(Serialize)]
struct FuzzJson<'a> {
    property: &'a str,
    semantics: &'a str,
    applicable: bool,
    trials: u64,
    effective_trials: u64,
    vacuous_trials: u64,
    unrealizable_trials: u64,
    violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_violation_trial: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_modified_graph: Option<String>,
}

fn cmd_fuzz(
    property: &str,
    semantics: &str,
    trials: u64,
    seed: u64,
    tolerance: f64,
    format: &str,
) -> Result<(), Failure> {
    let property = parse_property(property)?;
    let semantics = parse_semantics(semantics)?;
    let config = GraphConfig::default();
    let report = fuzz(property, semantics, trials, &config, seed, tolerance)
        .map_err(|e| Failure::Structural(e.to_string()))?;
    match format {
        "text" => print!("{}", report.render_text()),
        "json" => {
            let json = FuzzJson {
                property: property.name(),
                semantics: semantics.name(),
                applicable: report.applicable,
                trials: report.trials,
                effective_trials: report.effective_trials,
                vacuous_trials: report.vacuous_trials,
                unrealizable_trials: report.unrealizable_trials,
                violations: report.violations,
                first_violation_trial: report.first_violation_trial,
                witness_clause: report.first_witness.as_ref().map(|w| w.clause.clone()),
                witness_graph: report
                    .first_witness
                    .as_ref()
                    .map(|w| serialize_sg(&w.scenario.base)),
                witness_modified_graph: report
                    .first_witness
                    .as_ref()
                    .and_then(|w| w.scenario.modified.as_ref().map(serialize_sg)),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&json).expect("serializable report")
            );
        }
        other => return Err(Failure::UnknownName(format!("unknown format '{other}'"))),
    }
    Ok(())
}

fn cmd_matrix(trials: u64, seed: u64, tolerance: f64, format: &str) -> Result<(), Failure> {
    let config = GraphConfig::default();
    let report = satisfaction_matrix(
        &Semantics::ALL,
        &PropertyId::ALL,
        trials,
        &config,
        seed,
        tolerance,
    )
    .map_err(|e| Failure::Structural(e.to_string()))?;
    match format {
        "text" => print!("{}", report.render_text()),
        "json" => print!("{}", report.to_json()),
        other => return Err(Failure::UnknownName(format!("unknown format '{other}'"))),
    }
    Ok(())
}

fn cmd_export(
    format: &str,
    semantics: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<(), Failure> {
    let graph = load_graph(input)?;
    let strengths = match semantics {
        Some(name) => Some(evaluate(parse_semantics(name)?, &graph)?),
        None => None,
    };
    match format {
        "text" => print!("{}", serialize_sg(&graph)),
        "json" => print!(
            "{}",
            export_json(&graph, strengths.as_ref()).expect("strengths cover the graph")
        ),
        "dot" => print!(
            "{}",
            export_dot(&graph, strengths.as_ref()).expect("strengths cover the graph")
        ),
        other => return Err(Failure::UnknownName(format!("unknown format '{other}'"))),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval {
            semantics,
            format,
            input,
        } => cmd_eval(semantics, format, input),
        Command::Classify { input } => cmd_classify(input),
        Command::Props { fixtures: _ } => cmd_props(),
        Command::Fuzz {
            property,
            semantics,
            trials,
            seed,
            tolerance,
            format,
        } => cmd_fuzz(property, semantics, *trials, *seed, *tolerance, format),
        Command::Matrix {
            trials,
            seed,
            tolerance,
            format,
        } => cmd_matrix(*trials, *seed, *tolerance, format),
        Command::Export {
            format,
            semantics,
            input,
        } => cmd_export(format, semantics, input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            failure.report();
            ExitCode::from(failure.exit_code())
        }
    }
}
