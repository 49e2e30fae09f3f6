//! Weighted statement graphs and gradual strength semantics.
//!
//! A statement pairs a conjunctive premise (or the true premise `T`) with a
//! claimed literal; attack and support edges between statements are derived
//! from claims matching, or negating, premise literals. This crate builds
//! and validates such graphs, evaluates statement strengths under six
//! semantics (two support-tree based T-norm instantiations, two dialectical
//! conjunction instantiations, and the DF-QuAD and QEM semantics applied
//! directly), classifies statements by how completely they are grounded in
//! facts, and ships a property lab that checks seventeen formal properties
//! against fixtures and randomised scenarios.

pub mod bipolar;
pub mod cst;
pub mod export;
pub mod model;
pub mod modular;
pub mod parse;
pub mod properties;
pub mod random;
pub mod semantics;

pub use bipolar::{AbstractSemantics, BipolarEvalGraph, DfQuad, Qem};
pub use cst::{CompleteSupportTree, Completeness, DeMorganTriple};
pub use model::{
    Literal, ModelError, PathRelation, Premise, Statement, StatementGraph, StatementId,
};
pub use parse::{parse_sg, serialize_sg, ParseError, ParseErrorKind, SourceSpan};
pub use semantics::Semantics;
